"""
Exhaustive verification sweeps.

Each sweep checks a family of statements over every permutation of size up
to ``n`` (or every partition in a box) and returns a ``VerificationReport``.
Permutation sweeps can be fanned out over processes by first entry; reports
merge in a fixed order so output does not depend on scheduling.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable

from .betti import betti_oracle, convolution_check
from .groebner import GroebnerBasis, buchberger, divide, is_groebner, reduce_basis
from .ideals import (
    MinorSpec, antidiagonal_monomial, elusive_minors, extremal_family,
    fulton_generators, gao_yong_is_reduced, is_binomial_ideal, minor,
    reduced_schubert_basis,
)
from .permutations import (
    Permutation, avoids_all, diagram_components, enumerate_avoiders,
    is_binomial_pattern, is_vexillary, is_vexillary_by_chain,
    max_essential_rank, parts, patterns_for_rank_bound,
    rank_table, rothe_diagram, schroder,
)
from .polynomials import (
    Monomial, Polynomial, antidiagonal_order, antidiagonal_transpose_order,
)
from .regularity import (
    DEFAULT_EDGE_CAP, ads_regularity_of_shape, canonical_antidiagonal,
    partition_graph, partitions_in_box, recession_connectivity,
    recession_witness, regularity_decomposition, thicken,
)

__all__ = [
    "VerificationReport", "THEOREMS", "run", "check_main", "check_vexillary",
    "check_binomial", "check_patterns", "check_knutson_miller", "check_lemmas",
    "check_oracle_concordance", "verify_extremal", "verify_schroder",
    "verify_recession", "verify_properties", "lemma_failures",
]


@dataclass
class VerificationReport:
    theorem: str
    sweep: dict
    checked: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "schema": "1",
            "theorem": self.theorem,
            "sweep": self.sweep,
            "checked": self.checked,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
            "stats": self.stats,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out


# -- per-permutation checks: each returns (failure messages, tally) -----------

def check_main(w: Permutation):
    """Same size as the elusive basis; each degree-d member has >= 2^(d-1) terms."""
    G = reduced_schubert_basis(w)
    fails = []
    k = len(elusive_minors(w))
    if len(G) != k:
        fails.append(f"reduced basis has {len(G)} members, elusive basis {k}")
    for g in G:
        if g.num_terms < 2 ** (g.degree - 1):
            fails.append(f"degree-{g.degree} member with only {g.num_terms} terms")
    return fails, {}


def check_vexillary(w: Permutation):
    a, b, c = gao_yong_is_reduced(w), is_vexillary(w), is_vexillary_by_chain(w)
    fails = []
    if a != b:
        fails.append(f"elusive basis reduced={a} but avoids 2143={b}")
    if b != c:
        fails.append(f"pattern route {b} disagrees with essential-chain route {c}")
    return fails, {"vexillary": int(b)}


def check_binomial(w: Permutation):
    ideal = is_binomial_ideal(w)
    pattern = is_binomial_pattern(w)
    rank = max_essential_rank(w) <= 1
    elusive = all(s.size <= 2 for s in elusive_minors(w))
    fails = []
    if len({ideal, pattern, rank, elusive}) != 1:
        fails.append(
            f"binomial ideal={ideal}, avoids 1243/2143={pattern}, "
            f"max essential rank<=1={rank}, elusive binomials={elusive}"
        )
    return fails, {"binomial": int(pattern)}


def check_patterns(w: Permutation):
    fails = []
    for k in (1, 2, 3):
        lhs = max_essential_rank(w) < k
        rhs = avoids_all(w, patterns_for_rank_bound(k))
        if lhs != rhs:
            fails.append(f"k={k}: max essential rank < k is {lhs}, pattern avoidance is {rhs}")
    return fails, {}


def check_knutson_miller(w: Permutation):
    fails = []
    gens = [s.polynomial() for s, _ in fulton_generators(w)]
    for order in (antidiagonal_order(w.n), antidiagonal_transpose_order(w.n)):
        for s, _ in fulton_generators(w):
            lead = order.lead_monomial(s.polynomial())
            if lead != antidiagonal_monomial(s):
                fails.append(f"{order.name}: lead of {s} is not its antidiagonal")
        if not is_groebner(gens, order):
            fails.append(f"{order.name}: Fulton generators fail Buchberger's criterion")
        added = len(buchberger(gens, order)) - len(gens)
        if added:
            fails.append(f"{order.name}: Buchberger added {added} elements")
    return fails, {}


def lemma_failures(w: Permutation) -> list[str]:
    """Corner, rank and antidiagonal-position statements for every elusive minor of ``w``."""
    diagram = rothe_diagram(w)
    r = rank_table(w)
    n = w.n
    elusive = elusive_minors(w)
    generators = [s for s, _ in fulton_generators(w)]
    fails = []
    for m in elusive:
        d = m.size
        I, J = m.rows, m.cols
        if m.corner not in diagram:
            fails.append(f"corner {m.corner} of elusive {m} not in the diagram")
        for a in range(1, d):
            for j in range(J[-1], n + 1):
                if (I[a - 1], j) in diagram and r(I[a - 1], j) < a:
                    fails.append(f"{m}: r({I[a - 1]},{j}) < {a}")
            for i in range(I[-1], n + 1):
                if (i, J[a - 1]) in diagram and r(i, J[a - 1]) < a:
                    fails.append(f"{m}: r({i},{J[a - 1]}) < {a}")
        for sub in generators:
            k = sub.size
            if k >= d or not (set(sub.rows) <= set(I) and set(sub.cols) <= set(J)):
                continue
            p = [I.index(i) + 1 for i in sub.rows]
            q = [J.index(j) + 1 for j in sub.cols]
            for s in range(k):
                if p[s] + q[k - 1 - s] > d - 1:
                    fails.append(
                        f"antidiagonal of sub-minor {sub} not weakly NW of the "
                        f"(d-2)th antidiagonal of {m}"
                    )
                    break
    return fails


def check_lemmas(w: Permutation):
    return lemma_failures(w), {"elusive": len(elusive_minors(w))}


def _part_generator_groups(w: Permutation) -> list[list[Monomial]]:
    """Lead monomials of the elusive minors, grouped by the diagram component of their box."""
    comps = diagram_components(w)
    where = {cell: k for k, c in enumerate(comps) for cell in c.cells}
    groups: dict[int, list[Monomial]] = {}
    elusive = set(elusive_minors(w))
    for spec, box in fulton_generators(w):
        if spec in elusive:
            groups.setdefault(where[(box.row, box.col)], []).append(antidiagonal_monomial(spec))
    return [groups[k] for k in sorted(groups)]


def check_oracle_concordance(w: Permutation, edge_cap: int = DEFAULT_EDGE_CAP):
    if not is_binomial_pattern(w):
        return [], {"skipped": 1}
    G = reduced_schubert_basis(w)
    oracle = betti_oracle(G.lead_monomials()).regularity
    decomposition = regularity_decomposition(w)
    ads = sum(ads_regularity_of_shape(shape, edge_cap).value for _, r, shape in parts(w) if r > 0)
    fails = []
    if not (oracle == decomposition == ads):
        fails.append(f"oracle {oracle}, decomposition {decomposition}, ADS route {ads}")
    groups = _part_generator_groups(w)
    acc: list[Monomial] = []
    splits = 0
    for grp in groups:
        if acc:
            splits += 1
            try:
                ok = convolution_check(acc, grp)
            except ValueError as exc:
                fails.append(f"part split not variable-disjoint: {exc}")
                break
            if not ok:
                fails.append("Betti table of a part split is not the convolution")
        acc = acc + grp
    return fails, {"binomial": 1, "splits": splits}


PERM_CHECKS: dict[str, Callable] = {
    "main": check_main,
    "vexillary": check_vexillary,
    "binomial": check_binomial,
    "patterns": check_patterns,
    "knutson-miller": check_knutson_miller,
    "lemmas": check_lemmas,
    "regularity": check_oracle_concordance,
}


def _chunk(theorem: str, n: int, first: int | None):
    fn = PERM_CHECKS[theorem]
    rest = [v for v in range(1, n + 1) if v != first] if first else list(range(1, n + 1))
    checked = 0
    bad = []
    tally: Counter = Counter()
    for tail in permutations(rest):
        w = Permutation(((first,) if first else ()) + tail)
        fails, t = fn(w)
        checked += 1
        tally.update(t)
        if fails:
            bad.append({"w": str(w), "reasons": fails})
    return checked, bad, dict(tally)


def _perm_sweep(theorem: str, ns: list[int], parallel: int = 1, only_n: bool = False) -> VerificationReport:
    report = VerificationReport(theorem, {"n": max(ns), "sizes": ns})
    jobs = [(theorem, n, first) for n in ns for first in (range(1, n + 1) if n else [None])]
    if parallel > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            results = list(pool.map(_chunk, *zip(*jobs)))
    else:
        results = [_chunk(*job) for job in jobs]
    per_n: dict[int, Counter] = {}
    for (_, n, _), (checked, bad, tally) in zip(jobs, results):
        report.checked += checked
        report.counterexamples.extend(bad)
        per_n.setdefault(n, Counter()).update(tally)
        per_n[n]["checked"] += checked
    report.stats = {"per_n": {str(n): dict(sorted(c.items())) for n, c in sorted(per_n.items())}}
    return report


def _binomial_counts(report: VerificationReport):
    for n_str, c in report.stats["per_n"].items():
        n = int(n_str)
        expected = schroder(n - 1)
        c["schroder"] = expected
        if c.get("binomial", 0) != expected:
            report.counterexamples.append(
                {"n": n, "reasons": [f"{c.get('binomial', 0)} binomial permutations, expected s_{n - 1} = {expected}"]}
            )


def verify_extremal(max_n: int = 6) -> VerificationReport:
    report = VerificationReport("extremal", {"n": list(range(3, max_n + 1))})
    order_counts = {}
    for n in range(3, max_n + 1):
        w = extremal_family(n)
        expected = {MinorSpec((i,), (j,)) for i in range(1, n) for j in range(1, n) if i + j <= n - 1}
        expected.add(MinorSpec(tuple(range(1, n + 1)), tuple(range(1, n + 1))))
        fails = []
        if set(elusive_minors(w)) != expected:
            fails.append("elusive basis is not {x_ij : i+j <= n-1} plus det M[n,n]")
        G = reduced_schubert_basis(w)
        top = [g for g in G if g.degree == n]
        others = [g for g in G if g.degree != n]
        if len(top) != 1 or top[0].num_terms != 2 ** (n - 1):
            fails.append(f"degree-{n} members: {[g.num_terms for g in top]}, expected one with {2 ** (n - 1)} terms")
        if any(g.num_terms != 1 or g.degree != 1 for g in others):
            fails.append("non-top reduced members are not single variables")
        order_counts[str(n)] = top[0].num_terms if top else None
        report.checked += 1
        if fails:
            report.counterexamples.append({"w": str(w), "reasons": fails})
    report.stats = {"top_terms": order_counts}
    return report


def verify_schroder(max_n: int = 7) -> VerificationReport:
    report = VerificationReport("schroder", {"n": max_n})
    counts = {}
    pats = [Permutation((1, 2, 4, 3)), Permutation((2, 1, 4, 3))]
    for n in range(1, max_n + 1):
        c = enumerate_avoiders(n, pats, cap=max(max_n, 9))
        counts[str(n)] = c
        report.checked += 1
        if c != schroder(n - 1):
            report.counterexamples.append({"n": n, "reasons": [f"{c} avoiders, s_{n - 1} = {schroder(n - 1)}"]})
    report.stats = {"avoiders": counts}
    return report


def verify_recession(box: int = 3, witness_box: int = 6, edge_cap: int = DEFAULT_EDGE_CAP,
                     prune: bool = False) -> VerificationReport:
    """Exhaustive r(B) = |C|+1 in a box; witness validation in a larger box."""
    report = VerificationReport("recession", {"box": box, "witness_box": witness_box})
    exhaustive = 0
    for lam in partitions_in_box(box, box):
        B = partition_graph(thicken(lam))
        r = recession_connectivity(B, edge_cap, prune=prune)
        exhaustive += 1
        if r != canonical_antidiagonal(lam) + 1:
            report.counterexamples.append({"partition": str(lam), "reasons": [f"r(B) = {r}, |C|+1 = {canonical_antidiagonal(lam) + 1}"]})
    witnessed = 0
    for lam in partitions_in_box(witness_box, witness_box):
        try:
            recession_witness(lam)
        except AssertionError as exc:
            report.counterexamples.append({"partition": str(lam), "reasons": [str(exc)]})
        witnessed += 1
    report.checked = exhaustive + witnessed
    report.stats = {"exhaustive": exhaustive, "witnessed": witnessed}
    return report


def _random_poly(rng: random.Random, n: int, terms: int, deg: int) -> Polynomial:
    out = []
    for _ in range(terms):
        exps: dict = {}
        for _ in range(rng.randint(0, deg)):
            v = (rng.randint(1, n), rng.randint(1, n))
            exps[v] = exps.get(v, 0) + 1
        out.append((Monomial(exps), rng.randint(-5, 5)))
    return Polynomial(out)


def verify_properties(seed: int = 0, minors: int = 200, divisions: int = 200,
                      bases: int = 50) -> VerificationReport:
    """Randomized property suite: antidiagonal leads, division identity, reduction invariance."""
    rng = random.Random(seed)
    report = VerificationReport("properties", {"seed": seed, "minors": minors,
                                               "divisions": divisions, "bases": bases})
    fails = Counter()
    for _ in range(minors):
        n = rng.randint(1, 8)
        d = rng.randint(1, min(5, n))
        spec = MinorSpec(tuple(sorted(rng.sample(range(1, n + 1), d))),
                         tuple(sorted(rng.sample(range(1, n + 1), d))))
        order = antidiagonal_order(n)
        sign = -1 if d * (d - 1) // 2 % 2 else 1
        if order.lead(minor(spec.rows, spec.cols)) != (antidiagonal_monomial(spec), sign):
            fails["antidiagonal"] += 1
    for _ in range(divisions):
        n = rng.randint(2, 4)
        order = antidiagonal_order(n)
        f = _random_poly(rng, n, rng.randint(0, 8), 4)
        divs = [p for p in (_random_poly(rng, n, rng.randint(1, 3), 3) for _ in range(rng.randint(1, 3))) if p]
        if not divs:
            divs = [Polynomial.monomial(Monomial({(1, 1): 1}))]
        qs, r = divide(f, divs, order)
        if sum((q * d for q, d in zip(qs, divs)), Polynomial.zero()) + r != f:
            fails["division-identity"] += 1
        leads = [order.lead_monomial(d) for d in divs]
        if any(l.divides(m) for m in r.terms for l in leads):
            fails["division-remainder"] += 1
    for _ in range(bases):
        n = rng.randint(3, 6)
        w = Permutation(tuple(rng.sample(range(1, n + 1), n)))
        order = antidiagonal_order(n)
        polys = [s.polynomial() for s, _ in fulton_generators(w)]
        G = GroebnerBasis(tuple(polys), "groebner", order)
        R = reduce_basis(G)
        if reduce_basis(R).polys != R.polys:
            fails["reduce-idempotent"] += 1
        shuffled = list(polys)
        rng.shuffle(shuffled)
        if reduce_basis(GroebnerBasis(tuple(shuffled), "groebner", order)).polys != R.polys:
            fails["reduce-order-invariant"] += 1
    report.checked = minors + divisions + bases
    for name, count in sorted(fails.items()):
        report.counterexamples.append({"property": name, "reasons": [f"{count} failures"]})
    return report


THEOREMS = ("main", "extremal", "vexillary", "binomial", "patterns", "knutson-miller",
            "lemmas", "schroder", "regularity", "recession", "properties")


def run(theorem: str, n: int, parallel: int = 1, seed: int = 0, box: int = 3,
        witness_box: int = 6, edge_cap: int = DEFAULT_EDGE_CAP) -> VerificationReport:
    start = time.perf_counter()
    if theorem in ("knutson-miller",):
        report = _perm_sweep(theorem, [n], parallel)
    elif theorem in PERM_CHECKS:
        report = _perm_sweep(theorem, list(range(1, n + 1)), parallel)
        if theorem == "binomial":
            _binomial_counts(report)
    elif theorem == "extremal":
        report = verify_extremal(n)
    elif theorem == "schroder":
        report = verify_schroder(n)
    elif theorem == "recession":
        report = verify_recession(box, witness_box, edge_cap)
    elif theorem == "properties":
        report = verify_properties(seed)
    else:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    report.wall_time = time.perf_counter() - start
    return report
