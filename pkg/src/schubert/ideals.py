"""
Schubert determinantal ideals: Fulton's generators, the elusive-minor
(Gao-Yong) basis, reduced bases and the classification predicates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Sequence

from .groebner import GroebnerBasis, is_reduced, reduce_basis
from .permutations import (
    EssentialBox, Permutation, essential_set, parse_permutation,
)
from .polynomials import Monomial, Polynomial, TermOrder, antidiagonal_order

__all__ = [
    "MinorSpec", "SchubertIdeal", "minor", "fulton_generators", "attends",
    "belongs", "elusive_minors", "schubert_ideal", "elusive_basis",
    "reduced_schubert_basis", "extremal_family", "is_binomial_ideal",
    "gao_yong_is_reduced", "antidiagonal_monomial",
]


@dataclass(frozen=True, order=True)
class MinorSpec:
    """Row set I and column set J of a square minor, both strictly increasing."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        rows, cols = tuple(self.rows), tuple(self.cols)
        if len(rows) != len(cols) or not rows:
            raise ValueError(f"minor needs equal nonempty row/column sets, got {rows} x {cols}")
        if list(rows) != sorted(set(rows)) or list(cols) != sorted(set(cols)):
            raise ValueError("minor index sets must be strictly increasing")
        if rows[0] < 1 or cols[0] < 1:
            raise ValueError("minor indices are 1-based")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def corner(self) -> tuple[int, int]:
        """Southeast corner (i_d, j_d)."""
        return self.rows[-1], self.cols[-1]

    def antidiagonal(self) -> list[tuple[int, int]]:
        d = self.size
        return [(self.rows[a], self.cols[d - 1 - a]) for a in range(d)]

    def polynomial(self) -> Polynomial:
        return minor(self.rows, self.cols)

    def __str__(self):
        return f"m[{','.join(map(str, self.rows))} | {','.join(map(str, self.cols))}]"


def _sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=4096)
def minor(rows: tuple[int, ...], cols: tuple[int, ...]) -> Polynomial:
    """Determinant of the generic submatrix on ``rows`` x ``cols`` (Leibniz expansion)."""
    d = len(rows)
    terms = []
    for perm in permutations(range(d)):
        mono = Monomial._raw(tuple(sorted(((rows[a], cols[perm[a]]), 1) for a in range(d))))
        terms.append((mono, _sign(perm)))
    return Polynomial(terms)


def antidiagonal_monomial(spec: MinorSpec) -> Monomial:
    return Monomial.from_vars(spec.antidiagonal())


def fulton_generators(w: Permutation) -> list[tuple[MinorSpec, EssentialBox]]:
    """
    All (r+1)-minors of the NW submatrices M[i, j] over essential boxes (i, j).

    Each spec appears once, paired with the first essential box (row-major)
    it belongs to.
    """
    w = parse_permutation(w)
    out = []
    seen = set()
    for box in essential_set(w):
        d = box.rank + 1
        for rows in combinations(range(1, box.row + 1), d):
            for cols in combinations(range(1, box.col + 1), d):
                spec = MinorSpec(rows, cols)
                if spec not in seen:
                    seen.add(spec)
                    out.append((spec, box))
    return out


def belongs(m: MinorSpec, box: EssentialBox) -> bool:
    return m.rows[-1] <= box.row and m.cols[-1] <= box.col and m.size == box.rank + 1


def attends(m: MinorSpec, box: tuple[int, int], r_box: int, d: int) -> bool:
    """
    Whether ``m`` attends the NW submatrix M[i', j'] at ``box`` of rank ``r_box``.

    ``d`` is the size of ``m``, i.e. one more than the rank of the essential
    box it belongs to.
    """
    ip, jp = box
    rows_in = sum(1 for i in m.rows if i <= ip)
    cols_in = sum(1 for j in m.cols if j <= jp)
    return (rows_in > r_box and cols_in == d) or (rows_in == d and cols_in > r_box)


def _is_elusive_for(m: MinorSpec, box: EssentialBox, ess: Sequence[EssentialBox]) -> bool:
    d = box.rank + 1
    return not any(
        attends(m, (e.row, e.col), e.rank, d) for e in ess if e.rank < box.rank
    )


def elusive_minors(w: Permutation) -> list[MinorSpec]:
    """
    The elusive minors of ``w``, in Fulton-generator order.

    A minor is kept if it is elusive for at least one essential box it
    belongs to.
    """
    w = parse_permutation(w)
    ess = essential_set(w)
    out = []
    for spec, _ in fulton_generators(w):
        if any(belongs(spec, b) and _is_elusive_for(spec, b, ess) for b in ess):
            out.append(spec)
    return out


@dataclass(frozen=True)
class SchubertIdeal:
    w: Permutation
    fulton: tuple[tuple[MinorSpec, EssentialBox], ...]
    elusive: tuple[MinorSpec, ...]
    order: TermOrder = field(compare=False)

    @property
    def n(self) -> int:
        return self.w.n

    def fulton_polys(self) -> list[Polynomial]:
        return [s.polynomial() for s, _ in self.fulton]

    def elusive_polys(self) -> list[Polynomial]:
        return [s.polynomial() for s in self.elusive]

    def is_zero(self) -> bool:
        return not self.fulton


def schubert_ideal(w, order: TermOrder | None = None) -> SchubertIdeal:
    w = parse_permutation(w)
    order = order or antidiagonal_order(max(w.n, 1))
    return SchubertIdeal(w, tuple(fulton_generators(w)), tuple(elusive_minors(w)), order)


def elusive_basis(w, order: TermOrder | None = None) -> GroebnerBasis:
    """The elusive minors as a monic Groebner basis (kind ``minimal``)."""
    ideal = schubert_ideal(w, order)
    return GroebnerBasis(tuple(p.monic(ideal.order) for p in ideal.elusive_polys()),
                         "minimal", ideal.order)


def reduced_schubert_basis(w, order: TermOrder | None = None) -> GroebnerBasis:
    return reduce_basis(elusive_basis(w, order))


def extremal_family(n: int) -> Permutation:
    """
    The permutation (n-1)(n-2)...(1)(n+1)(n) in S_{n+1}.

    Its elusive basis is {x[i,j] : i+j <= n-1} together with det M[n, n], and
    the reduced degree-n member has exactly 2^(n-1) terms.

    >>> str(extremal_family(4))
    '3,2,1,5,4'
    """
    if n < 3:
        raise ValueError("extremal family is defined for n >= 3")
    return Permutation(tuple(range(n - 1, 0, -1)) + (n + 1, n))


def is_binomial_ideal(w, order: TermOrder | None = None) -> bool:
    return all(g.num_terms <= 2 for g in reduced_schubert_basis(w, order))


def gao_yong_is_reduced(w, order: TermOrder | None = None) -> bool:
    G = elusive_basis(w, order)
    return is_reduced(G.polys, G.order)

