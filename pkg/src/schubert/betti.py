"""
Graded Betti numbers of S/I for a squarefree monomial ideal I.

Candidate multidegrees are the elements of the lcm lattice of the minimal
generators. At each such degree the multigraded Betti number is the reduced
homology of a small simplicial complex, computed by exact rational rank:

* ``method="hochster"``: the induced subcomplex of the Stanley-Reisner complex
  on the support of the degree, beta_{i,m} = dim H~_{|m|-i-1}.
* ``method="lcm"``: the crosscut complex of the lcm-lattice interval below m
  (subsets of generators dividing m whose lcm is not m),
  beta_{i,m} = dim H~_{i-2}.

The two routes are independent and agree; the Hochster route is the default
because its complexes stay small when many generators are variables.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ResourceCapExceeded
from .polynomials import Monomial

__all__ = [
    "BettiTable", "betti_oracle", "convolve", "convolution_check",
    "reduced_homology_ranks", "MAX_GENERATORS",
]

MAX_GENERATORS = 20


@dataclass(frozen=True)
class BettiTable:
    """Nonzero graded Betti numbers beta[(i, j)] of S/I."""

    betti: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, d: dict[tuple[int, int], int]) -> BettiTable:
        return cls(tuple(sorted((k, v) for k, v in d.items() if v)))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.betti)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.as_dict().get(ij, 0)

    @property
    def regularity(self) -> int:
        return max(j - i for (i, j), _ in self.betti)

    @property
    def projective_dimension(self) -> int:
        return max(i for (i, _), _ in self.betti)

    def to_json(self) -> list[dict]:
        return [{"i": i, "j": j, "beta": b} for (i, j), b in self.betti]

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data) -> BettiTable:
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_dict({(t["i"], t["j"]): t["beta"] for t in data})


def _rank(rows: list[dict[int, int]]) -> int:
    """Rank over Q of a sparse matrix given as row dicts col -> int entry."""
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for row in rows:
        r = {c: Fraction(v) for c, v in row.items() if v}
        while r:
            col = min(r)
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = {c: v / r[col] for c, v in r.items()}
                rank += 1
                break
            f = r[col]
            for c, v in piv.items():
                nv = r.get(c, 0) - f * v
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
    return rank


def reduced_homology_ranks(faces: Iterable[int]) -> dict[int, int]:
    """
    Reduced homology dimensions of a simplicial complex given by its faces as
    vertex bitmasks (closed under subsets, including the empty face 0).

    Returns {dimension: rank} for nonzero groups; dimension -1 appears only
    for the complex {empty}.
    """
    by_dim: dict[int, list[int]] = defaultdict(list)
    for f in faces:
        by_dim[bin(f).count("1") - 1].append(f)
    index = {d: {f: k for k, f in enumerate(sorted(fs))} for d, fs in by_dim.items()}
    boundary_rank: dict[int, int] = {}
    for d, fs in by_dim.items():
        if d < 0:
            continue
        lower = index.get(d - 1, {})
        rows = []
        for f in fs:
            row = {}
            sign = 1
            g = f
            while g:
                low = g & -g
                row[lower[f ^ low]] = sign
                sign = -sign
                g ^= low
            rows.append(row)
        boundary_rank[d] = _rank(rows)
    out = {}
    for d, fs in by_dim.items():
        h = len(fs) - boundary_rank.get(d, 0) - boundary_rank.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def _hochster_faces(support: int, gens: Sequence[int]) -> list[int]:
    """Subsets of ``support`` that contain no generator."""
    relevant = [g for g in gens if g & ~support == 0]
    verts = []
    s = support
    while s:
        low = s & -s
        verts.append(low)
        s ^= low
    faces = [0]

    def grow(face, start):
        for k in range(start, len(verts)):
            nf = face | verts[k]
            if any(g & ~nf == 0 for g in relevant):
                continue
            faces.append(nf)
            grow(nf, k + 1)

    grow(0, 0)
    return faces


def _crosscut_faces(m: int, gens: Sequence[int]) -> list[int]:
    """Subsets of generators dividing m whose lcm is strictly below m (as bitmasks over atoms)."""
    atoms = [g for g in gens if g & ~m == 0]
    faces = []
    for sub in range(1 << len(atoms)):
        l = 0
        for k, g in enumerate(atoms):
            if sub >> k & 1:
                l |= g
        if l != m:
            faces.append(sub)
    return faces


def betti_oracle(gens: Sequence[Monomial], method: str = "hochster",
                 max_generators: int = MAX_GENERATORS) -> BettiTable:
    """
    Graded Betti table of S/I for I generated by squarefree monomials.

    >>> from schubert.polynomials import Monomial
    >>> betti_oracle([Monomial({(1, 2): 1, (2, 1): 1})]).as_dict()
    {(0, 0): 1, (1, 2): 1}
    """
    if method not in ("hochster", "lcm"):
        raise ValueError(f"unknown method {method!r}")
    gens = list(dict.fromkeys(gens))
    if any(not g.squarefree for g in gens):
        raise ValueError("betti_oracle needs squarefree monomial generators")
    if len(gens) > max_generators:
        raise ResourceCapExceeded(f"{len(gens)} generators exceed the oracle budget {max_generators}")
    if any(g.degree == 0 for g in gens):
        # unit ideal: S/I = 0
        return BettiTable(())
    variables = sorted({v for g in gens for v in g.variables()})
    bit = {v: 1 << k for k, v in enumerate(variables)}
    masks = [sum(bit[v] for v in g.variables()) for g in gens]
    # keep minimal generators only
    masks = [a for a in masks if not any(b != a and b & ~a == 0 for b in masks)]
    lattice = {0}
    for g in masks:
        lattice |= {l | g for l in lattice}
    betti: dict[tuple[int, int], int] = defaultdict(int)
    betti[(0, 0)] = 1
    for m in sorted(lattice):
        if m == 0:
            continue
        size = bin(m).count("1")
        if method == "hochster":
            for dim, rk in reduced_homology_ranks(_hochster_faces(m, masks)).items():
                betti[(size - dim - 1, size)] += rk
        else:
            for dim, rk in reduced_homology_ranks(_crosscut_faces(m, masks)).items():
                betti[(dim + 2, size)] += rk
    return BettiTable.from_dict(betti)


def convolve(t1: BettiTable, t2: BettiTable) -> BettiTable:
    out: dict[tuple[int, int], int] = defaultdict(int)
    for (i, j), b in t1.betti:
        for (k, l), c in t2.betti:
            out[(i + k, j + l)] += b * c
    return BettiTable.from_dict(out)


def convolution_check(gens1: Sequence[Monomial], gens2: Sequence[Monomial],
                      method: str = "hochster") -> bool:
    """Betti table of the union equals the convolution of the two tables, and regularities add."""
    vars1 = {v for g in gens1 for v in g.variables()}
    vars2 = {v for g in gens2 for v in g.variables()}
    if vars1 & vars2:
        raise ValueError(f"generator supports overlap in {sorted(vars1 & vars2)}")
    t1 = betti_oracle(gens1, method)
    t2 = betti_oracle(gens2, method)
    t = betti_oracle(list(gens1) + list(gens2), method)
    return t == convolve(t1, t2) and t.regularity == t1.regularity + t2.regularity
