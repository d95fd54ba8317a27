"""
Permutation combinatorics: rank tables, Rothe diagrams, essential sets,
pattern containment and the classifier predicates built on them.

All indices exposed by this module are 1-based, matching matrix conventions:
``w(i)`` is the column of the 1 in row ``i`` of the permutation matrix.

>>> w = parse_permutation("31425")
>>> sorted(rothe_diagram(w))
[(1, 1), (1, 2), (3, 2)]
>>> essential_set(w)
[EssentialBox(row=1, col=2, rank=0), EssentialBox(row=3, col=2, rank=1)]
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import PartsError, ResourceCapExceeded

__all__ = [
    "Permutation", "RankTable", "EssentialBox", "DiagramComponent",
    "parse_permutation", "format_permutation", "rank_table", "rothe_diagram",
    "essential_set", "contains_pattern", "avoids_all", "is_vexillary",
    "is_vexillary_by_chain", "max_essential_rank", "is_binomial_pattern",
    "is_dominant", "diagram_components", "dominant_of_shape", "pad",
    "parts", "enumerate_avoiders", "iter_avoiders", "schroder",
    "patterns_for_rank_bound", "all_permutations", "DEFAULT_ENUM_CAP",
]

DEFAULT_ENUM_CAP = 9

Cell = tuple[int, int]


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation of 1..{len(word)}: {list(word)}")
        object.__setattr__(self, "word", word)

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.word, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def inversions(self) -> int:
        return sum(1 for a, b in combinations(self.word, 2) if a > b)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.word, start=1))

    def __str__(self) -> str:
        return format_permutation(self)


def parse_permutation(text: str | Sequence[int] | Permutation) -> Permutation:
    """
    Parse one-line notation.

    Accepts comma- or whitespace-separated integers, or a bare digit string
    when n <= 9.

    >>> parse_permutation("2,10,1,3,4,5,6,7,8,9").n
    10
    >>> parse_permutation("312").word
    (3, 1, 2)
    """
    if isinstance(text, Permutation):
        return text
    if not isinstance(text, str):
        return Permutation(tuple(text))
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty permutation")
    if re.fullmatch(r"\d+", stripped):
        word = tuple(int(c) for c in stripped)
        if len(word) > 9:
            raise ValueError("digit-string shorthand only supports n <= 9; use commas")
    else:
        tokens = [t for t in re.split(r"[\s,]+", stripped) if t]
        try:
            word = tuple(int(t) for t in tokens)
        except ValueError:
            raise ValueError(f"cannot parse permutation {text!r}") from None
    return Permutation(word)


def format_permutation(w: Permutation, shorthand: bool = False) -> str:
    if shorthand and w.n <= 9:
        return "".join(str(v) for v in w.word)
    return ",".join(str(v) for v in w.word)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order."""
    from itertools import permutations
    for word in permutations(range(1, n + 1)):
        yield Permutation(word)


@dataclass(frozen=True)
class RankTable:
    """``r(i, j)`` = number of 1s of the permutation matrix weakly NW of (i, j)."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __call__(self, i: int, j: int) -> int:
        if i <= 0 or j <= 0:
            return 0
        return self.rows[i - 1][j - 1]

    def row(self, i: int) -> tuple[int, ...]:
        return self.rows[i - 1]


def rank_table(w: Permutation) -> RankTable:
    n = w.n
    rows = []
    prev = [0] * n
    for i in range(1, n + 1):
        cur = [prev[j - 1] + (1 if w(i) <= j else 0) for j in range(1, n + 1)]
        rows.append(tuple(cur))
        prev = cur
    return RankTable(n, tuple(rows))


def rothe_diagram(w: Permutation) -> frozenset[Cell]:
    winv = w.inverse()
    n = w.n
    return frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, w(i))
        if i < winv(j)
    )


class EssentialBox(NamedTuple):
    row: int
    col: int
    rank: int


def essential_set(w: Permutation) -> list[EssentialBox]:
    """Southeast corners of the diagram, with their rank, sorted by (row, col)."""
    diagram = rothe_diagram(w)
    r = rank_table(w)
    return [
        EssentialBox(i, j, r(i, j))
        for (i, j) in sorted(diagram)
        if (i + 1, j) not in diagram and (i, j + 1) not in diagram
    ]


def _order_pattern(values: Sequence[int]) -> tuple[int, ...]:
    ranked = sorted(values)
    return tuple(ranked.index(v) + 1 for v in values)


def contains_pattern(w: Permutation, v: Permutation) -> bool:
    """Exhaustive search over all |v|-subsequences of ``w``."""
    w, v = parse_permutation(w), parse_permutation(v)
    if v.n > w.n:
        raise ValueError(f"pattern of size {v.n} longer than permutation of size {w.n}")
    target = v.word
    return any(_order_pattern(sub) == target for sub in combinations(w.word, v.n))


def avoids_all(w: Permutation, patterns: Iterable[Permutation]) -> bool:
    return not any(p.n <= w.n and contains_pattern(w, p) for p in patterns)


_P2143 = Permutation((2, 1, 4, 3))
_P1243 = Permutation((1, 2, 4, 3))


def is_vexillary(w: Permutation) -> bool:
    return w.n < 4 or not contains_pattern(w, _P2143)


def is_vexillary_by_chain(w: Permutation) -> bool:
    """Vexillarity via the essential set: it must be a chain, each box weakly SW of the next."""
    boxes = sorted(essential_set(w), key=lambda e: (-e.row, e.col))
    return all(a.row >= b.row and a.col <= b.col for a, b in zip(boxes, boxes[1:]))


def max_essential_rank(w: Permutation) -> int:
    return max((e.rank for e in essential_set(w)), default=-1)


def is_binomial_pattern(w: Permutation) -> bool:
    return avoids_all(w, (_P1243, _P2143))


def is_dominant(w: Permutation) -> bool:
    return all(e.rank == 0 for e in essential_set(w))


def patterns_for_rank_bound(k: int) -> list[Permutation]:
    """The k! patterns v·(k+2)·(k+1) for v in S_k."""
    from itertools import permutations
    return [Permutation(v + (k + 2, k + 1)) for v in permutations(range(1, k + 1))]


@dataclass(frozen=True)
class DiagramComponent:
    cells: frozenset[Cell]
    # None when essential boxes in the component disagree
    rank: int | None
    # normalized partition when the component, translated to (1, 1), is a Young diagram
    shape: tuple[int, ...] | None = field(default=None)


def _young_shape(cells: frozenset[Cell]) -> tuple[int, ...] | None:
    top = min(i for i, _ in cells)
    left = min(j for _, j in cells)
    rows: dict[int, list[int]] = {}
    for i, j in cells:
        rows.setdefault(i - top + 1, []).append(j - left + 1)
    lengths = []
    for k in range(1, len(rows) + 1):
        cols = sorted(rows.get(k, []))
        if not cols or cols != list(range(1, len(cols) + 1)):
            return None
        lengths.append(len(cols))
    if len(rows) != len(lengths) or any(a < b for a, b in zip(lengths, lengths[1:])):
        return None
    return tuple(lengths)


def diagram_components(w: Permutation) -> list[DiagramComponent]:
    """Connected components of D(w) under 4-adjacency, ordered by their NW-most cell."""
    diagram = rothe_diagram(w)
    ess = {(e.row, e.col): e.rank for e in essential_set(w)}
    seen: set[Cell] = set()
    out = []
    for start in sorted(diagram):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            i, j = stack.pop()
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in diagram and nb not in comp:
                    comp.add(nb)
                    stack.append(nb)
        seen |= comp
        ranks = {ess[c] for c in comp if c in ess}
        cells = frozenset(comp)
        out.append(DiagramComponent(
            cells=cells,
            rank=ranks.pop() if len(ranks) == 1 else None,
            shape=_young_shape(cells),
        ))
    return out


def dominant_of_shape(shape: Sequence[int]) -> Permutation:
    """
    The smallest dominant permutation whose diagram is ``shape`` placed at (1, 1).

    Built from its Lehmer code, which for a dominant permutation is the shape
    itself padded with zeros.

    >>> dominant_of_shape((2, 2)).word
    (3, 4, 1, 2)
    """
    lam = tuple(int(p) for p in shape if p)
    if any(a < b for a, b in zip(lam, lam[1:])) or any(p < 0 for p in shape):
        raise ValueError(f"not a partition: {tuple(shape)}")
    n = max((p + i for i, p in enumerate(lam, start=1)), default=1)
    code = list(lam) + [0] * (n - len(lam))
    unused = list(range(1, n + 1))
    return Permutation(tuple(unused.pop(c) for c in code))


def pad(w: Permutation, m: int) -> Permutation:
    """Embed ``w`` into S_m by appending fixed points."""
    if m < w.n:
        raise ValueError(f"cannot pad S_{w.n} down to S_{m}")
    return Permutation(w.word + tuple(range(w.n + 1, m + 1)))


def parts(w: Permutation) -> list[tuple[Permutation, int, tuple[int, ...]]]:
    """
    Parts ``u = 1^r x v`` of ``w``, one per diagram component.

    Returns ``(u, r, shape)`` triples in component order, where ``v`` is the
    dominant permutation of the component's shape.
    """
    out = []
    for comp in diagram_components(w):
        if comp.rank is None:
            raise PartsError(f"component {sorted(comp.cells)} of {w} has unequal essential ranks")
        if comp.shape is None:
            raise PartsError(f"component {sorted(comp.cells)} of {w} is not a translated Young diagram")
        v = dominant_of_shape(comp.shape)
        r = comp.rank
        u = Permutation(tuple(range(1, r + 1)) + tuple(x + r for x in v.word))
        out.append((u, r, comp.shape))
    return out


def _extends_pattern(prefix: list[int], patterns: Sequence[tuple[int, ...]]) -> bool:
    """Whether some occurrence of a pattern ends at the last entry of ``prefix``."""
    last = prefix[-1]
    head = prefix[:-1]
    for pat in patterns:
        m = len(pat)
        if m > len(prefix):
            continue
        for sub in combinations(head, m - 1):
            if _order_pattern(sub + (last,)) == pat:
                return True
    return False


def iter_avoiders(n: int, patterns: Iterable[Permutation], cap: int = DEFAULT_ENUM_CAP) -> Iterator[Permutation]:
    """Yield avoiders in S_n lexicographically, pruning prefixes that already contain a pattern."""
    if n > cap:
        raise ResourceCapExceeded(f"n={n} exceeds enumeration cap {cap}")
    pats = [parse_permutation(p).word for p in patterns]
    prefix: list[int] = []
    used = [False] * (n + 1)

    def extend():
        if len(prefix) == n:
            yield Permutation(tuple(prefix))
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            prefix.append(v)
            # the relative order of a prefix never changes, so a hit prunes the subtree
            if not _extends_pattern(prefix, pats):
                used[v] = True
                yield from extend()
                used[v] = False
            prefix.pop()

    if n == 0:
        yield Permutation(())
        return
    yield from extend()


def enumerate_avoiders(n: int, patterns: Iterable[Permutation], cap: int = DEFAULT_ENUM_CAP) -> int:
    return sum(1 for _ in iter_avoiders(n, patterns, cap))


def schroder(n: int) -> int:
    """
    Large Schroder numbers from the three-term recurrence.

    >>> [schroder(k) for k in range(6)]
    [1, 2, 6, 22, 90, 394]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1
    prev, cur = 1, 2
    for k in range(2, n + 1):
        num = (6 * k - 3) * cur - (k - 2) * prev
        assert num % (k + 1) == 0
        prev, cur = cur, num // (k + 1)
    return cur
