"""
Command-line entry point: ``schubert <subcommand> ...``.

Exit codes: 0 success / sweep passed, 1 counterexample found, 2 usage or
input error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import verify
from .betti import betti_oracle
from .errors import PartsError, ResourceCapExceeded
from .groebner import GroebnerBasis
from .ideals import (
    MinorSpec, elusive_basis, gao_yong_is_reduced, is_binomial_ideal,
    reduced_schubert_basis, schubert_ideal,
)
from .permutations import (
    enumerate_avoiders, is_binomial_pattern, is_vexillary, iter_avoiders,
    essential_set, max_essential_rank, parse_permutation, parts, rothe_diagram,
    schroder,
)
from .polynomials import ORDER_NAMES, order_by_name
from .regularity import (
    DEFAULT_EDGE_CAP, ads_regularity_of_shape, parse_partition, regularity_decomposition,
    rrw_regularity,
)

SCHEMA = "1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

DEFAULT_VERIFY_N = {
    "main": 6, "extremal": 6, "vexillary": 6, "binomial": 6, "patterns": 6,
    "knutson-miller": 5, "lemmas": 6, "schroder": 7, "regularity": 5,
    "recession": 0, "properties": 0,
}


class UsageError(ValueError):
    pass


def max_n() -> int:
    raw = os.environ.get("SCHUBERT_MAX_N", "7")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"SCHUBERT_MAX_N must be an integer, got {raw!r}")


def _var(i: int, j: int) -> str:
    return f"x[{i},{j}]"


def pretty_minor(spec: MinorSpec) -> list[str]:
    """ASCII determinant: a single variable, or rows framed by vertical bars."""
    if spec.size == 1:
        return [_var(spec.rows[0], spec.cols[0])]
    cells = [[_var(i, j) for j in spec.cols] for i in spec.rows]
    width = max(len(c) for row in cells for c in row)
    return ["| " + " ".join(c.ljust(width) for c in row) + " |" for row in cells]


def _cell_list(cells) -> list[list[int]]:
    return [list(c) for c in sorted(cells)]


def _minor_json(spec: MinorSpec) -> dict:
    return {"rows": list(spec.rows), "cols": list(spec.cols)}


def _basis_json(G: GroebnerBasis) -> list[dict]:
    return [
        {"degree": g.degree, "num_terms": g.num_terms, "poly": g.to_text(G.order)}
        for g in G.polys
    ]


def _parts_json(w):
    try:
        return [
            {"u": str(u), "rank": r, "shape": list(shape) if shape else None}
            for u, r, shape in parts(w)
        ]
    except PartsError:
        return None


def _emit(args, payload: dict, lines: list[str]):
    if args.json:
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=False))
    else:
        print("\n".join(lines))


# -- subcommands ---------------------------------------------------------------

def cmd_ideal(args) -> int:
    w = parse_permutation(args.w)
    order = order_by_name(args.order, max(w.n, 1))
    ideal = schubert_ideal(w, order)
    ess = essential_set(w)
    payload = {
        "w": str(w),
        "diagram": _cell_list(rothe_diagram(w)),
        "essential": [{"i": b.row, "j": b.col, "r": b.rank} for b in ess],
        "fulton_count": len(ideal.fulton),
        "fulton": [_minor_json(s) for s, _ in ideal.fulton],
        "elusive": [_minor_json(s) for s in ideal.elusive],
    }
    lines = [f"w = {w}"]
    if ideal.is_zero():
        lines.append("empty ideal: w is the identity, no rank conditions")
        payload["empty"] = True
        _emit(args, payload, lines)
        return EXIT_OK
    lines.append("diagram: " + " ".join(f"({i},{j})" for i, j in sorted(rothe_diagram(w))))
    lines.append("essential set: " + ", ".join(f"({b.row},{b.col}) r={b.rank}" for b in ess))
    for title, specs in (("Fulton generators", [s for s, _ in ideal.fulton]),
                         ("elusive minors", list(ideal.elusive))):
        lines.append(f"{title} ({len(specs)}):")
        for s in specs:
            if args.pretty:
                lines.extend("  " + row for row in pretty_minor(s))
                if s.size > 1:
                    lines.append("")
            else:
                lines.append(f"  {s}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_groebner(args) -> int:
    w = parse_permutation(args.w)
    order = order_by_name(args.order, max(w.n, 1))
    G = reduced_schubert_basis(w, order) if args.reduced else elusive_basis(w, order)
    payload = {"w": str(w), "order": order.name, "kind": G.kind, "basis": _basis_json(G)}
    lines = [f"w = {w}  order = {order.name}  kind = {G.kind}  size = {len(G)}"]
    if not G.polys:
        lines.append("empty basis")
    for g in G.polys:
        lines.append(f"  [degree {g.degree}, {g.num_terms} terms] {g.to_text(order)}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_classify(args) -> int:
    w = parse_permutation(args.w)
    order = order_by_name(args.order, max(w.n, 1))
    flags = {
        "vexillary": is_vexillary(w),
        "binomial": is_binomial_pattern(w),
        "gao_yong_reduced": gao_yong_is_reduced(w, order),
        "binomial_ideal": is_binomial_ideal(w, order),
    }
    payload = {
        "w": str(w),
        "flags": flags,
        "max_essential_rank": max_essential_rank(w),
        "parts": _parts_json(w),
    }
    lines = [f"w = {w}"]
    lines += [f"{k}: {str(v).lower()}" for k, v in flags.items()]
    lines.append(f"max_essential_rank: {payload['max_essential_rank']}")
    if payload["parts"] is None:
        lines.append("parts: unavailable (a diagram component is not a rank-uniform Young shape)")
    else:
        for p in payload["parts"]:
            shape = ",".join(map(str, p["shape"])) if p["shape"] else "-"
            lines.append(f"part: u = {p['u']}  rank = {p['rank']}  shape = {shape}")
    _emit(args, payload, lines)
    return EXIT_OK


def _regularity_partition(args) -> int:
    lam = parse_partition(args.partition)
    rrw = rrw_regularity(lam)
    ads = ads_regularity_of_shape(lam, args.edge_cap)
    payload = {
        "partition": list(lam.parts),
        "rrw": rrw,
        "ads": ads.value,
        "ads_mode": ads.mode,
        "agree": rrw == ads.value,
    }
    lines = [f"partition = {lam}", f"rrw: {rrw}", f"ads: {ads.describe()}",
             f"agree: {str(payload['agree']).lower()}"]
    _emit(args, payload, lines)
    return EXIT_OK if payload["agree"] else EXIT_FAIL


def cmd_regularity(args) -> int:
    if args.partition:
        if args.w:
            raise UsageError("give either a permutation or --partition, not both")
        return _regularity_partition(args)
    if not args.w:
        raise UsageError("regularity needs a permutation or --partition")
    w = parse_permutation(args.w)
    G = reduced_schubert_basis(w)
    oracle = betti_oracle(G.lead_monomials()).regularity
    payload: dict = {"w": str(w), "oracle": oracle}
    lines = [f"w = {w}", f"oracle: {oracle}"]
    if is_binomial_pattern(w):
        decomposition = regularity_decomposition(w)
        ads_parts = [ads_regularity_of_shape(shape, args.edge_cap)
                     for _, r, shape in parts(w) if r > 0]
        ads = sum(a.value for a in ads_parts)
        payload.update({
            "decomposition": decomposition,
            "ads": ads,
            "ads_modes": [a.mode for a in ads_parts],
        })
        payload["agree"] = oracle == decomposition == ads
        lines += [f"decomposition: {decomposition}", f"ads: {ads}"]
    else:
        payload.update({"decomposition": None, "ads": None, "agree": None})
        lines.append("decomposition: unavailable (w contains 1243 or 2143)")
    if payload["agree"] is not None:
        lines.append(f"agree: {str(payload['agree']).lower()}")
    _emit(args, payload, lines)
    return EXIT_FAIL if payload["agree"] is False else EXIT_OK


def cmd_verify(args) -> int:
    n = args.n if args.n is not None else DEFAULT_VERIFY_N[args.theorem]
    if n > max_n():
        raise UsageError(f"--n {n} exceeds SCHUBERT_MAX_N={max_n()}")
    if n < 0:
        raise UsageError("--n must be non-negative")
    report = verify.run(args.theorem, n, parallel=args.parallel, seed=args.seed,
                        box=args.box, witness_box=args.witness_box, edge_cap=args.edge_cap)
    if args.json:
        print(json.dumps(report.to_json(timing=args.timing), indent=2))
    else:
        status = "PASS" if report.passed else "FAIL"
        line = f"{status} {report.theorem} sweep={json.dumps(report.sweep)} checked={report.checked}"
        if args.timing:
            line += f" time={report.wall_time:.2f}s"
        print(line)
        for c in report.counterexamples[:20]:
            print("  counterexample:", json.dumps(c))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_enumerate(args) -> int:
    n = args.n
    if n is None:
        raise UsageError("enumerate needs --n")
    if n > max_n():
        raise UsageError(f"--n {n} exceeds SCHUBERT_MAX_N={max_n()}")
    patterns = [parse_permutation(p) for p in args.avoid.split(",") if p]
    payload: dict = {
        "n": n,
        "avoid": [str(p) for p in patterns],
        "count": enumerate_avoiders(n, patterns, cap=max_n()),
    }
    if {str(p) for p in patterns} == {"1,2,4,3", "2,1,4,3"} and n >= 1:
        payload["schroder"] = schroder(n - 1)
    lines = [f"avoiders of {' '.join(payload['avoid'])} in S_{n}: {payload['count']}"]
    if "schroder" in payload:
        lines.append(f"schroder({n - 1}) = {payload['schroder']}")
    if args.list:
        perms = [str(w) for w in iter_avoiders(n, patterns)]
        payload["permutations"] = perms
        lines += perms
    _emit(args, payload, lines)
    return EXIT_OK


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--json", action="store_true", help="machine-readable output")
    mode.add_argument("--pretty", action="store_true", help="ASCII determinant layout")
    common.add_argument("--order", choices=sorted(ORDER_NAMES), default="antidiag")
    common.add_argument("--edge-cap", type=int, default=DEFAULT_EDGE_CAP,
                        help="largest edge count searched exhaustively")

    parser = argparse.ArgumentParser(prog="schubert", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ideal", parents=[common], help="diagram, essential set, generators")
    p.add_argument("w")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("groebner", parents=[common], help="Gao-Yong or reduced basis")
    p.add_argument("w")
    p.add_argument("--reduced", action="store_true")
    p.set_defaults(func=cmd_groebner)

    p = sub.add_parser("classify", parents=[common], help="vexillary / binomial flags")
    p.add_argument("w")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("regularity", parents=[common], help="regularity by every route")
    p.add_argument("w", nargs="?")
    p.add_argument("--partition")
    p.set_defaults(func=cmd_regularity)

    p = sub.add_parser("verify", parents=[common], help="exhaustive theorem sweep")
    p.add_argument("--theorem", choices=verify.THEOREMS, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--box", type=int, default=3, help="exhaustive recession box side")
    p.add_argument("--witness-box", type=int, default=6, help="witness validation box side")
    p.add_argument("--timing", action="store_true", help="include wall time (not deterministic)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="count pattern avoiders")
    p.add_argument("--n", type=int)
    p.add_argument("--avoid", default="1243,2143", help="comma-separated patterns")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceCapExceeded as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
