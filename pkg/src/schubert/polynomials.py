"""
Exact sparse polynomials in the grid variables x[i,j] and lexicographic
term orders on them.

Coefficients are Python ints or ``fractions.Fraction`` (integral fractions are
normalized to int), so all arithmetic is exact.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Union

__all__ = [
    "Monomial", "Polynomial", "TermOrder", "antidiagonal_order",
    "antidiagonal_transpose_order", "order_by_name", "ORDER_NAMES", "MAX_GRID",
    "x",
]

Coeff = Union[int, Fraction]
Var = tuple[int, int]

# grid variables are limited to i, j <= MAX_GRID so they fit in the bitmask/key encodings
MAX_GRID = 32
_EXP_BITS = 16


def _norm(c) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    if isinstance(c, (int, Fraction)):
        return c
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def _div(a: Coeff, b: Coeff) -> Coeff:
    if b == 1:
        return a
    if b == -1:
        return -a
    return _norm(Fraction(a) / b)


def _var_bit(v: Var) -> int:
    i, j = v
    if not (1 <= i <= MAX_GRID and 1 <= j <= MAX_GRID):
        raise ValueError(f"grid variable x[{i},{j}] outside 1..{MAX_GRID}")
    return 1 << ((i - 1) * MAX_GRID + (j - 1))


class Monomial:
    """A monomial in the x[i,j], stored as a sorted tuple of ((i, j), exponent)."""

    __slots__ = ("exps", "degree", "mask", "squarefree", "_hash")

    def __init__(self, exps: Mapping[Var, int] | Iterable[tuple[Var, int]] = ()):
        items = exps.items() if isinstance(exps, Mapping) else exps
        acc: dict[Var, int] = {}
        for v, e in items:
            if e < 0:
                raise ValueError("negative exponent")
            if e:
                v = (int(v[0]), int(v[1]))
                acc[v] = acc.get(v, 0) + e
        self._set(tuple(sorted(acc.items())))

    def _set(self, exps):
        self.exps = exps
        self.degree = sum(e for _, e in exps)
        mask = 0
        for v, _ in exps:
            mask |= _var_bit(v)
        self.mask = mask
        self.squarefree = all(e == 1 for _, e in exps)
        self._hash = hash(exps)

    @classmethod
    def _raw(cls, exps: tuple) -> Monomial:
        m = cls.__new__(cls)
        m._set(exps)
        return m

    @classmethod
    def one(cls) -> Monomial:
        return cls._raw(())

    @classmethod
    def var(cls, i: int, j: int, e: int = 1) -> Monomial:
        return cls({(i, j): e})

    @classmethod
    def from_vars(cls, variables: Iterable[Var]) -> Monomial:
        acc: dict[Var, int] = {}
        for v in variables:
            acc[v] = acc.get(v, 0) + 1
        return cls(acc)

    def as_dict(self) -> dict[Var, int]:
        return dict(self.exps)

    def variables(self) -> tuple[Var, ...]:
        return tuple(v for v, _ in self.exps)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return self._hash

    def __mul__(self, other: Monomial) -> Monomial:
        if not self.exps:
            return other
        if not other.exps:
            return self
        acc = dict(self.exps)
        for v, e in other.exps:
            acc[v] = acc.get(v, 0) + e
        return Monomial._raw(tuple(sorted(acc.items())))

    def divides(self, other: Monomial) -> bool:
        if self.mask & ~other.mask:
            return False
        if self.squarefree:
            return True
        theirs = dict(other.exps)
        return all(theirs[v] >= e for v, e in self.exps)

    def __truediv__(self, other: Monomial) -> Monomial:
        acc = dict(self.exps)
        for v, e in other.exps:
            left = acc.get(v, 0) - e
            if left < 0:
                raise ValueError(f"{other} does not divide {self}")
            if left:
                acc[v] = left
            else:
                del acc[v]
        return Monomial._raw(tuple(sorted(acc.items())))

    def lcm(self, other: Monomial) -> Monomial:
        acc = dict(self.exps)
        for v, e in other.exps:
            if e > acc.get(v, 0):
                acc[v] = e
        return Monomial._raw(tuple(sorted(acc.items())))

    def coprime(self, other: Monomial) -> bool:
        return not (self.mask & other.mask)

    def to_text(self) -> str:
        parts = []
        for (i, j), e in self.exps:
            parts.append(f"x[{i},{j}]" + (f"^{e}" if e > 1 else ""))
        return "·".join(parts) if parts else "1"

    def __repr__(self):
        return f"Monomial({self.to_text()})"


class TermOrder:
    """
    Lexicographic order induced by a ranking of the grid variables.

    ``position(i, j)`` returns a non-negative int; a larger position means a
    larger variable. Monomials are compared through an integer key packing the
    exponents by position, so the comparison is plain int comparison.
    """

    def __init__(self, name: str, n: int, position: Callable[[int, int], int]):
        if n < 1:
            raise ValueError("grid size must be >= 1")
        self.name = name
        self.n = n
        self._position = position
        self._cache: dict[Monomial, int] = {}

    def key(self, m: Monomial) -> int:
        k = self._cache.get(m)
        if k is None:
            k = 0
            for (i, j), e in m.exps:
                if e >= 1 << _EXP_BITS:
                    raise OverflowError("exponent too large for term-order key")
                k += e << (_EXP_BITS * self._position(i, j))
            if len(self._cache) > 500_000:
                self._cache.clear()
            self._cache[m] = k
        return k

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)

    def lead(self, f: Polynomial) -> tuple[Monomial, Coeff]:
        if not f.terms:
            raise ValueError("zero polynomial has no lead term")
        m = max(f.terms, key=self.key)
        return m, f.terms[m]

    def lead_monomial(self, f: Polynomial) -> Monomial:
        return self.lead(f)[0]

    def sorted_terms(self, f: Polynomial) -> list[tuple[Monomial, Coeff]]:
        """Terms in descending order."""
        return sorted(f.terms.items(), key=lambda t: self.key(t[0]), reverse=True)

    def __repr__(self):
        return f"TermOrder({self.name!r}, n={self.n})"

    def __eq__(self, other):
        return isinstance(other, TermOrder) and (self.name, self.n) == (other.name, other.n)

    def __hash__(self):
        return hash((self.name, self.n))

    def __reduce__(self):
        return (order_by_name, (self.name, self.n))


def _antidiag_position(i: int, j: int) -> int:
    # rightmost column first; within a column, topmost row first
    return (j - 1) * MAX_GRID + (MAX_GRID - i)


def _antidiag_transpose_position(i: int, j: int) -> int:
    # topmost row first; within a row, rightmost column first
    return (MAX_GRID - i) * MAX_GRID + (j - 1)


def antidiagonal_order(n: int) -> TermOrder:
    """
    Lex order with x[i,j] > x[k,l] iff j > l, or j == l and i < k.

    The lead term of every minor of the generic matrix is its antidiagonal.
    """
    return TermOrder("antidiag", n, _antidiag_position)


def antidiagonal_transpose_order(n: int) -> TermOrder:
    """Lex order with x[i,j] > x[k,l] iff i < k, or i == k and j > l (also antidiagonal)."""
    return TermOrder("antidiag-transpose", n, _antidiag_transpose_position)


ORDER_NAMES = {
    "antidiag": antidiagonal_order,
    "antidiag-transpose": antidiagonal_transpose_order,
}


def order_by_name(name: str, n: int) -> TermOrder:
    try:
        return ORDER_NAMES[name](n)
    except KeyError:
        raise ValueError(f"unknown term order {name!r}; choose from {sorted(ORDER_NAMES)}") from None


class Polynomial:
    """Sparse polynomial: a dict Monomial -> nonzero exact coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Coeff] | Iterable[tuple[Monomial, Coeff]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Coeff] = {}
        for m, c in items:
            c = _norm(c)
            if c:
                s = acc.get(m, 0) + c
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)
        self.terms = acc

    @classmethod
    def _wrap(cls, terms: dict) -> Polynomial:
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def zero(cls) -> Polynomial:
        return cls._wrap({})

    @classmethod
    def constant(cls, c: Coeff) -> Polynomial:
        return cls({Monomial.one(): c})

    @classmethod
    def monomial(cls, m: Monomial, c: Coeff = 1) -> Polynomial:
        return cls({m: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def num_terms(self) -> int:
        return len(self.terms)

    @property
    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self.terms}) <= 1

    def variables(self) -> set[Var]:
        out: set[Var] = set()
        for m in self.terms:
            out.update(m.variables())
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        if isinstance(other, Monomial):
            return Polynomial.monomial(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        for m, c in other.terms.items():
            s = acc.get(m, 0) + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return Polynomial._wrap(acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._wrap({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Coeff) -> Polynomial:
        c = _norm(c)
        if not c:
            return Polynomial.zero()
        return Polynomial._wrap({m: _norm(v * c) for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, c: Coeff = 1) -> Polynomial:
        c = _norm(c)
        if not c:
            return Polynomial.zero()
        return Polynomial._wrap({mono * m: _norm(v * c) for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Monomial):
            return self.mul_term(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        acc: dict[Monomial, Coeff] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                s = acc.get(m, 0) + c1 * c2
                if s:
                    acc[m] = _norm(s)
                else:
                    acc.pop(m, None)
        return Polynomial._wrap(acc)

    __rmul__ = __mul__

    def monic(self, order: TermOrder) -> Polynomial:
        if not self.terms:
            return self
        _, c = order.lead(self)
        if c == 1:
            return self
        return self.scale(_div(1, c))

    # -- serialization ------------------------------------------------------

    def to_text(self, order: TermOrder) -> str:
        """
        Render as ``±c·x[i,j]^e·…`` with terms in descending order.

        >>> from schubert.polynomials import x, antidiagonal_order
        >>> (x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1)).to_text(antidiagonal_order(2))
        '-x[1,2]·x[2,1] + x[1,1]·x[2,2]'
        """
        if not self.terms:
            return "0"
        out = []
        for k, (m, c) in enumerate(order.sorted_terms(self)):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if m.exps:
                body = m.to_text() if mag == 1 else f"{mag}·{m.to_text()}"
            else:
                body = str(mag)
            if k == 0:
                out.append(("-" if sign == "-" else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    @classmethod
    def from_text(cls, text: str) -> Polynomial:
        s = text.replace(" ", "").replace("*", "·")
        if s == "0":
            return cls.zero()
        if not s:
            raise ValueError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        terms = []
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            c: Coeff = 1
            exps: dict[Var, int] = {}
            for factor in body.split("·"):
                mv = re.fullmatch(r"x\[(\d+),(\d+)\](?:\^(\d+))?", factor)
                if mv:
                    v = (int(mv.group(1)), int(mv.group(2)))
                    exps[v] = exps.get(v, 0) + int(mv.group(3) or 1)
                elif re.fullmatch(r"\d+(/\d+)?", factor):
                    c = c * Fraction(factor)
                else:
                    raise ValueError(f"bad factor {factor!r} in {text!r}")
            terms.append((Monomial(exps), c if sign == "+" else -c))
        joined = "".join(f"{sg}{b}" for sg, b in re.findall(r"([+-])([^+-]+)", s))
        if joined != s:
            raise ValueError(f"cannot parse polynomial {text!r}")
        return cls(terms)

    def to_json(self, order: TermOrder) -> list[dict]:
        out = []
        for m, c in order.sorted_terms(self):
            fc = Fraction(c)
            out.append({
                "coeff": f"{fc.numerator}/{fc.denominator}",
                "exps": [[i, j, e] for (i, j), e in m.exps],
            })
        return out

    @classmethod
    def from_json(cls, data: list[dict] | str) -> Polynomial:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            (Monomial({(i, j): e for i, j, e in term["exps"]}), Fraction(term["coeff"]))
            for term in data
        )

    def __repr__(self):
        return f"Polynomial({self.to_text(antidiagonal_order(MAX_GRID))})"


def x(i: int, j: int) -> Polynomial:
    """The grid variable x[i,j] as a polynomial."""
    return Polynomial._wrap({Monomial({(i, j): 1}): 1})
