import pytest

from schubert import verify
from schubert.permutations import parse_permutation


def test_report_pass_flag_tracks_counterexamples():
    r = verify.VerificationReport("main", {"n": 1})
    assert r.passed
    r.counterexamples.append({"w": "1", "reasons": ["x"]})
    assert not r.passed
    data = r.to_json()
    assert data["schema"] == "1" and data["passed"] is False
    assert "wall_time" not in data
    assert "wall_time" in r.to_json(timing=True)


def test_unknown_theorem():
    with pytest.raises(ValueError):
        verify.run("nope", 3)


@pytest.mark.parametrize("w", ["31425", "31542", "32154", "31254", "2143"])
def test_per_permutation_checks_pass_on_examples(w):
    w = parse_permutation(w)
    for name, check in verify.PERM_CHECKS.items():
        fails, _ = check(w)
        assert fails == [], (name, fails)


def test_main_check_flags_a_short_member(monkeypatch):
    from schubert.polynomials import x

    class Fake:
        polys = (x(1, 1) * x(2, 2) * x(3, 3),)

        def __len__(self):
            return 1

        def __iter__(self):
            return iter(self.polys)

    monkeypatch.setattr(verify, "reduced_schubert_basis", lambda w: Fake())
    fails, _ = verify.check_main(parse_permutation("21"))
    assert any("only 1 terms" in f for f in fails)


def test_recession_sweep_small():
    r = verify.verify_recession(box=2, witness_box=3)
    assert r.passed and r.stats == {"exhaustive": 5, "witnessed": 19}


def test_properties_are_seeded():
    a = verify.verify_properties(seed=3, minors=20, divisions=20, bases=5)
    b = verify.verify_properties(seed=3, minors=20, divisions=20, bases=5)
    assert a.to_json() == b.to_json() and a.passed
