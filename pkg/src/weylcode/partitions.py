"""
Integer partitions and compositions.

A :class:`Composition` is an ordered tuple of positive parts; a
:class:`SortedPartition` is a composition whose parts are weakly decreasing.
Sorting a composition is always an explicit call to :meth:`Composition.sorted`.
Partial sums past the end of a sequence are taken to be constant, i.e. the
shorter sequence is padded with zeros.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence


@dataclass(frozen=True)
class Composition:
    """An ordered sequence of positive integers ``(p_1, ..., p_m)``."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("a partition must have at least one part")
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive integers, got {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def is_sorted(self) -> bool:
        return all(a >= b for a, b in zip(self.parts, self.parts[1:]))

    def sorted(self) -> SortedPartition:
        return SortedPartition(tuple(sorted(self.parts, reverse=True)))

    def partial_sums(self, length: Optional[int] = None) -> list[int]:
        """Prefix sums ``p_1 + ... + p_i`` for i = 1..length, zero-padded."""
        if length is None:
            length = len(self.parts)
        padded = self.parts + (0,) * max(0, length - len(self.parts))
        return list(itertools.accumulate(padded[:length]))

    def boundaries(self) -> list[int]:
        """Block boundaries ``p_1, p_1+p_2, ..., p_1+...+p_{m-1}``."""
        return self.partial_sums()[:-1]

    def blocks(self) -> list[range]:
        """The 1-based index blocks ``{1..p_1}, {p_1+1..p_1+p_2}, ...``."""
        out = []
        start = 1
        for p in self.parts:
            out.append(range(start, start + p))
            start += p
        return out

    def to_json(self) -> list[int]:
        return list(self.parts)


@dataclass(frozen=True)
class SortedPartition(Composition):
    """A partition ``(t_1 >= t_2 >= ... >= t_b > 0)``."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_sorted():
            raise ValueError(f"parts must be weakly decreasing, got {self.parts}")

    def transpose(self) -> SortedPartition:
        return transpose(self)


def parse_parts(text: str) -> tuple[int, ...]:
    """
    Parse the comma-separated integer grammar used on the command line.

    >>> parse_parts("4,2,2,1")
    (4, 2, 2, 1)
    """
    items = text.split(",")
    out = []
    for item in items:
        item = item.strip()
        if not item or not (item.isascii() and item.isdigit()):
            raise ValueError(f"malformed integer list {text!r}")
        out.append(int(item))
    return tuple(out)


def composition(parts) -> Composition:
    if isinstance(parts, str):
        parts = parse_parts(parts)
    return Composition(tuple(parts))


def partition(parts) -> SortedPartition:
    if isinstance(parts, str):
        parts = parse_parts(parts)
    return SortedPartition(tuple(parts))


def transpose(lam: Composition) -> SortedPartition:
    """
    The conjugate partition ``q_i = #{j : p_j >= i}``. Works for unsorted
    compositions as well; the result is always sorted.

    >>> transpose(composition("3,2,2,1")).parts
    (4, 3, 1)
    >>> transpose(composition("3,1,3")).parts
    (3, 2, 2)
    """
    parts = tuple(lam.parts)
    if not parts:
        raise ValueError("cannot transpose an empty partition")
    return SortedPartition(
        tuple(sum(1 for p in parts if p >= i) for i in range(1, max(parts) + 1))
    )


class Relation(enum.Enum):
    GREATER = "greater"
    LESS = "less"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class DominanceVerdict:
    """
    Result of comparing ``a`` against ``b``. ``a_over_b`` is the first
    (1-based) index where a's partial sum strictly exceeds b's, and
    ``b_over_a`` the reverse.
    """

    relation: Relation
    a_over_b: Optional[int] = None
    b_over_a: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "relation": self.relation.value,
            "a_over_b": self.a_over_b,
            "b_over_a": self.b_over_a,
        }


def _check_same_n(a: Composition, b: Composition):
    if a.n != b.n:
        raise ValueError(f"partitions of different integers: {a.n} vs {b.n}")


def _first_excess(x: Sequence[int], y: Sequence[int]) -> Optional[int]:
    for i, (u, v) in enumerate(zip(x, y), start=1):
        if u > v:
            return i
    return None


def dominance_compare(a: SortedPartition, b: SortedPartition) -> DominanceVerdict:
    """
    >>> dominance_compare(partition("4,2,2,1"), partition("3,3,3")).relation
    <Relation.INCOMPARABLE: 'incomparable'>
    """
    _check_same_n(a, b)
    for x in (a, b):
        if not x.is_sorted():
            raise ValueError(f"dominance needs sorted partitions, got {x}")
    length = max(len(a), len(b))
    sa, sb = a.partial_sums(length), b.partial_sums(length)
    up = _first_excess(sa, sb)
    down = _first_excess(sb, sa)
    if up is None and down is None:
        rel = Relation.EQUAL
    elif down is None:
        rel = Relation.GREATER
    elif up is None:
        rel = Relation.LESS
    else:
        rel = Relation.INCOMPARABLE
    return DominanceVerdict(rel, up, down)


def dominates(a: SortedPartition, b: SortedPartition) -> bool:
    """``a >= b`` in the dominance order."""
    return dominance_compare(a, b).relation in (Relation.GREATER, Relation.EQUAL)


def partial_sum_violation(lam: Composition, mu: Composition) -> Optional[int]:
    """
    Smallest ``l`` with ``p_1 + ... + p_l > t_1 + ... + t_l``, or ``None``.
    The order of ``lam`` is used as given.

    >>> partial_sum_violation(composition("4,1,1"), partition("3,3"))
    1
    >>> partial_sum_violation(composition("3,3,3"), partition("4,2,2,1"))
    3
    """
    _check_same_n(lam, mu)
    length = max(len(lam), len(mu))
    return _first_excess(lam.partial_sums(length), mu.partial_sums(length))


@dataclass(frozen=True)
class BoundCheck:
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def equality(self) -> bool:
        return self.lhs == self.rhs


def partial_sum_bound(lam: Composition, l: int, k: int) -> BoundCheck:
    """
    Evaluate both sides of ``p_1+...+p_l <= l*k + q_{k+1}+...+q_n`` where
    ``(q_i)`` is the transpose of ``lam``.
    """
    q = transpose(lam).parts
    if not 1 <= l <= len(lam):
        raise ValueError(f"l={l} out of range 1..{len(lam)}")
    if not 1 <= k <= len(q):
        raise ValueError(f"k={k} out of range 1..{len(q)}")
    return BoundCheck(sum(lam.parts[:l]), l * k + sum(q[k:]))


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> list[SortedPartition]:
    """All partitions of n in reverse lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    return [SortedPartition(p) for p in _partitions(n, n)]


def enumerate_compositions(n: int) -> list[Composition]:
    """All 2**(n-1) compositions of n, one per subset of cut points."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for cuts in itertools.product((False, True), repeat=n - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(Composition(tuple(parts)))
    return out
