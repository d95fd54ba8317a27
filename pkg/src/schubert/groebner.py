"""
Multivariate division, S-polynomials, Buchberger's algorithm and the
minimal / reduced normalizations of a Groebner basis.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from .polynomials import Monomial, Polynomial, TermOrder, _div, _norm

__all__ = [
    "GroebnerBasis", "KINDS", "divide", "normal_form", "s_polynomial",
    "buchberger", "is_groebner", "minimalize", "reduce_basis",
    "is_minimal", "is_reduced",
]

KINDS = ("raw", "groebner", "minimal", "reduced")


@dataclass(frozen=True)
class GroebnerBasis:
    polys: tuple[Polynomial, ...]
    kind: str
    order: TermOrder

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown basis kind {self.kind!r}")
        object.__setattr__(self, "polys", tuple(self.polys))

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def lead_monomials(self) -> list[Monomial]:
        return [self.order.lead_monomial(g) for g in self.polys]

    def at_least(self, kind: str) -> bool:
        return KINDS.index(self.kind) >= KINDS.index(kind)


def divide(f: Polynomial, divisors: Sequence[Polynomial], order: TermOrder,
           quotients: bool = True) -> tuple[list[Polynomial], Polynomial]:
    """
    Full multivariate division of ``f`` by the ordered ``divisors``.

    Every term of the working polynomial is examined in descending order;
    a term goes to the remainder only when no divisor lead term divides it.
    Returns ``(quotients, remainder)`` with ``f == sum(q*d) + r``.
    """
    if any(d.is_zero() for d in divisors):
        raise ValueError("cannot divide by the zero polynomial")
    leads = [order.lead(d) for d in divisors]
    work = dict(f.terms)
    rem: dict[Monomial, object] = {}
    quots: list[dict] = [dict() for _ in divisors]
    key = order.key
    heap = [(-key(m), id(m), m) for m in work]
    heapq.heapify(heap)
    queued = set(work)
    while heap:
        _, _, m = heapq.heappop(heap)
        queued.discard(m)
        c = work.pop(m, 0)
        if not c:
            continue
        for k, (lm, lc) in enumerate(leads):
            if lm.divides(m):
                qm = m / lm
                qc = _div(c, lc)
                if quotients:
                    quots[k][qm] = _norm(quots[k].get(qm, 0) + qc)
                for dm, dc in divisors[k].terms.items():
                    if dm is lm or dm == lm:
                        continue
                    nm = qm * dm
                    s = _norm(work.get(nm, 0) - qc * dc)
                    if s:
                        work[nm] = s
                        if nm not in queued:
                            queued.add(nm)
                            heapq.heappush(heap, (-key(nm), id(nm), nm))
                    else:
                        work.pop(nm, None)
                break
        else:
            rem[m] = c
    return [Polynomial(q) for q in quots], Polynomial._wrap(rem)


def normal_form(f: Polynomial, divisors: Sequence[Polynomial], order: TermOrder) -> Polynomial:
    return divide(f, divisors, order, quotients=False)[1]


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    """lcm/LT(f) * f - lcm/LT(g) * g, where LT carries its coefficient."""
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of the zero polynomial")
    fm, fc = order.lead(f)
    gm, gc = order.lead(g)
    l = fm.lcm(gm)
    return f.mul_term(l / fm, _div(1, fc)) - g.mul_term(l / gm, _div(1, gc))


def _pairs_reduce_to_zero(polys: list[Polynomial], order: TermOrder, skip_coprime: bool) -> bool:
    leads = [order.lead_monomial(p) for p in polys]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if skip_coprime and leads[i].coprime(leads[j]):
                continue
            if normal_form(s_polynomial(polys[i], polys[j], order), polys, order):
                return False
    return True


def is_groebner(gens: Sequence[Polynomial], order: TermOrder, skip_coprime: bool = True) -> bool:
    """Buchberger's criterion: every S-pair reduces to zero against ``gens``."""
    polys = [g for g in gens if not g.is_zero()]
    return _pairs_reduce_to_zero(polys, order, skip_coprime)


def buchberger(gens: Sequence[Polynomial], order: TermOrder) -> GroebnerBasis:
    """
    Extend ``gens`` to a Groebner basis.

    Pairs are processed by the normal strategy (smallest lcm first, ties by
    index); pairs with coprime lead monomials are skipped. Input generators are
    kept (made monic) in their original order; new elements are appended.
    """
    basis = [g.monic(order) for g in gens if not g.is_zero()]
    leads = [order.lead_monomial(g) for g in basis]
    pairs = []

    def add_pairs(j):
        for i in range(j):
            if leads[i].coprime(leads[j]):
                continue
            l = leads[i].lcm(leads[j])
            heapq.heappush(pairs, (order.key(l), i, j))

    for j in range(len(basis)):
        add_pairs(j)
    while pairs:
        _, i, j = heapq.heappop(pairs)
        r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if r:
            basis.append(r.monic(order))
            leads.append(order.lead_monomial(basis[-1]))
            add_pairs(len(basis) - 1)
    return GroebnerBasis(tuple(basis), "groebner", order)


def _require(G: GroebnerBasis, kind: str):
    if not G.at_least(kind):
        raise ValueError(f"expected a basis of kind >= {kind!r}, got {G.kind!r}")


def minimalize(G: GroebnerBasis) -> GroebnerBasis:
    """Drop every member whose lead monomial is divisible by another member's."""
    _require(G, "groebner")
    order = G.order
    polys = [g for g in G.polys if not g.is_zero()]
    leads = [order.lead_monomial(g) for g in polys]
    keep = []
    for i, li in enumerate(leads):
        redundant = any(
            lj.divides(li) and (lj != li or j < i)
            for j, lj in enumerate(leads) if j != i
        )
        if not redundant:
            keep.append(polys[i].monic(order))
    return GroebnerBasis(tuple(keep), "minimal", order)


def reduce_basis(G: GroebnerBasis) -> GroebnerBasis:
    """
    The reduced Groebner basis: minimalize, then replace each member in turn
    by its remainder modulo the others. Output is monic and sorted by
    descending lead monomial, so it does not depend on the input order.
    """
    _require(G, "groebner")
    order = G.order
    current = list(minimalize(G).polys)
    for i in range(len(current)):
        others = current[:i] + current[i + 1:]
        current[i] = normal_form(current[i], others, order).monic(order)
    current.sort(key=lambda g: order.key(order.lead_monomial(g)), reverse=True)
    return GroebnerBasis(tuple(current), "reduced", order)


def is_minimal(polys: Sequence[Polynomial], order: TermOrder) -> bool:
    leads = [order.lead_monomial(p) for p in polys]
    return not any(
        a.divides(b) for i, a in enumerate(leads) for j, b in enumerate(leads) if i != j
    )


def is_reduced(polys: Sequence[Polynomial], order: TermOrder) -> bool:
    """No lead monomial divides any term of another member, and every member is monic."""
    leads = [order.lead(p) for p in polys]
    if any(c != 1 for _, c in leads):
        return False
    for i, (lm, _) in enumerate(leads):
        for j, p in enumerate(polys):
            if i != j and any(lm.divides(m) for m in p.terms):
                return False
    return True
