import json
import subprocess
import sys

import pytest

from schubert.cli import main, pretty_minor
from schubert.ideals import MinorSpec


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    data = json.loads(out)
    assert data["schema"] == "1"
    return code, data


def test_ideal_31425_pretty(capsys):
    code, out, _ = run(capsys, "ideal", "31425", "--pretty")
    assert code == 0
    assert "Fulton generators (5):" in out
    assert "| x[1,1] x[1,2] |\n  | x[3,1] x[3,2] |" in out


def test_ideal_json_31425(capsys):
    code, data = run_json(capsys, "ideal", "31425")
    assert data["diagram"] == [[1, 1], [1, 2], [3, 2]]
    assert data["essential"] == [{"i": 1, "j": 2, "r": 0}, {"i": 3, "j": 2, "r": 1}]
    assert data["fulton_count"] == 5
    assert data["elusive"] == [
        {"rows": [1], "cols": [1]}, {"rows": [1], "cols": [2]},
        {"rows": [2, 3], "cols": [1, 2]}]


def test_ideal_identity(capsys):
    code, out, _ = run(capsys, "ideal", "1")
    assert code == 0 and "empty ideal" in out


def test_ideal_31542_json(capsys):
    _, data = run_json(capsys, "ideal", "31542")
    assert len(data["elusive"]) == 7


def test_groebner_examples(capsys):
    _, data = run_json(capsys, "groebner", "32154", "--reduced")
    assert sorted((m["degree"], m["num_terms"]) for m in data["basis"]) == [
        (1, 1), (1, 1), (1, 1), (4, 8)]
    _, data = run_json(capsys, "groebner", "31542", "--reduced")
    assert [m["num_terms"] for m in data["basis"] if m["degree"] == 3] == [4, 4]
    _, data = run_json(capsys, "groebner", "12345")
    assert data["basis"] == []


def test_groebner_order_flag(capsys):
    _, data = run_json(capsys, "groebner", "31542", "--reduced", "--order", "antidiag-transpose")
    assert data["order"] == "antidiag-transpose"


def test_classify_examples(capsys):
    _, data = run_json(capsys, "classify", "2143")
    assert data["flags"]["vexillary"] is False and data["flags"]["binomial"] is False
    _, data = run_json(capsys, "classify", "31425")
    assert data["flags"]["vexillary"] is True and data["flags"]["binomial"] is True
    _, data = run_json(capsys, "classify", "31254")
    assert data["flags"]["binomial"] is False and data["max_essential_rank"] == 3


def test_regularity_partition(capsys):
    code, data = run_json(capsys, "regularity", "--partition", "6,4,1,1,1")
    assert code == 0
    assert (data["rrw"], data["ads"], data["ads_mode"]) == (3, 3, "witness")


def test_regularity_permutation(capsys):
    _, data = run_json(capsys, "regularity", "31425")
    assert data["decomposition"] == 1 and data["oracle"] == 1 and data["agree"]
    _, data = run_json(capsys, "regularity", "3412")
    assert data["decomposition"] == 0 and data["oracle"] == 0


def test_regularity_usage_errors(capsys):
    assert main(["regularity"]) == 2
    assert main(["regularity", "21", "--partition", "1"]) == 2


def test_enumerate(capsys):
    _, data = run_json(capsys, "enumerate", "--n", "5")
    assert data["count"] == 90 and data["schroder"] == 90
    _, data = run_json(capsys, "enumerate", "--n", "3", "--avoid", "132", "--list")
    assert data["count"] == 5 and len(data["permutations"]) == 5


def test_verify_examples(capsys):
    code, data = run_json(capsys, "verify", "--theorem", "binomial", "--n", "5")
    assert code == 0 and data["passed"]
    assert data["stats"]["per_n"]["5"]["binomial"] == 90
    code, data = run_json(capsys, "verify", "--theorem", "main", "--n", "3")
    assert code == 0 and data["counterexamples"] == []
    code, data = run_json(capsys, "verify", "--theorem", "schroder", "--n", "7")
    assert code == 0 and data["stats"]["avoiders"]["7"] == 1806


def test_verify_parallel_matches_serial(capsys):
    _, a, _ = run(capsys, "verify", "--theorem", "lemmas", "--n", "5", "--json")
    _, b, _ = run(capsys, "verify", "--theorem", "lemmas", "--n", "5", "--json", "--parallel", "2")
    assert a == b


def test_max_n_guard(capsys, monkeypatch):
    assert main(["verify", "--theorem", "main", "--n", "8"]) == 2
    monkeypatch.setenv("SCHUBERT_MAX_N", "4")
    assert main(["enumerate", "--n", "5"]) == 2
    monkeypatch.setenv("SCHUBERT_MAX_N", "oops")
    assert main(["verify", "--theorem", "main", "--n", "3"]) == 2


def test_exit_codes(capsys):
    assert main(["ideal", "113"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
    assert main(["regularity", "--partition", "6,4,1,1,1", "--edge-cap", "0"]) == 0
    capsys.readouterr()
    # partition shapes within the cap go through exhaustive search
    code, data = run_json(capsys, "regularity", "--partition", "1")
    assert data["ads_mode"] == "exhaustive"


def test_cap_exit_code(capsys, monkeypatch):
    import schubert.cli as cli

    def boom(*a, **k):
        from schubert.errors import ResourceCapExceeded
        raise ResourceCapExceeded("too big")

    monkeypatch.setattr(cli, "betti_oracle", boom)
    assert main(["regularity", "31425"]) == 3


def test_failing_sweep_exit_code(capsys, monkeypatch):
    import schubert.verify as verify
    monkeypatch.setitem(verify.PERM_CHECKS, "main", lambda w: (["planted"], {}))
    code, data = run_json(capsys, "verify", "--theorem", "main", "--n", "2")
    assert code == 1 and not data["passed"]


@pytest.mark.parametrize("argv", [
    ["ideal", "31542", "--json"],
    ["groebner", "31254", "--reduced"],
    ["classify", "32154", "--json"],
    ["verify", "--theorem", "vexillary", "--n", "4", "--json"],
])
def test_output_is_deterministic(capsys, argv):
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b


def test_pretty_minor_layout():
    assert pretty_minor(MinorSpec((1,), (2,))) == ["x[1,2]"]
    assert pretty_minor(MinorSpec((1, 2), (1, 2))) == ["| x[1,1] x[1,2] |", "| x[2,1] x[2,2] |"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "schubert", "classify", "2143"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "vexillary: false" in proc.stdout
