"""
Minimal representatives for the right cosets W(P)\\W(G) of a standard
parabolic subgroup, described by column-increasing descending codes.

For a parabolic ``(r_1, ..., r_a)`` of ``r+1`` the slots ``0, 1, ..., r`` are
written into a diagram column by column, ``r_j`` slots in column ``j``. Slot
0 is a placeholder; the slots of column 1 always carry the identity value
``k_i = i+1``, so a :class:`CosetCode` only stores columns ``2..a``. Its
representative is ``Pi_2 ... Pi_a`` where ``Pi_j`` is the product of the
descending cycles of column ``j``.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterator, Optional

from .partitions import Composition, SortedPartition, transpose
from .weyl import (
    DescendingCode,
    Permutation,
    ReducedWord,
    Root,
    RootSet,
    act_on_root,
    compress_cycle,
    cycle_letters,
    encode,
)


def column_slots(parabolic: Composition) -> list[range]:
    """
    Slot indices of columns 2..a.

    >>> column_slots(Composition((3, 4, 2)))
    [range(3, 7), range(7, 9)]
    """
    sums = parabolic.partial_sums()
    return [range(sums[j - 1], sums[j]) for j in range(1, len(sums))]


@dataclass(frozen=True)
class CosetCode:
    parabolic: Composition
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        columns = tuple(tuple(int(k) for k in col) for col in self.columns)
        object.__setattr__(self, "columns", columns)
        object.__setattr__(self, "parabolic", Composition(tuple(self.parabolic)))
        slots = column_slots(self.parabolic)
        if len(columns) != len(slots):
            raise ValueError(
                f"parabolic {self.parabolic} has {len(slots)} coded columns, got {len(columns)}"
            )
        for col, idx in zip(columns, slots):
            if len(col) != len(idx):
                raise ValueError(f"column {col} should have {len(idx)} entries")
            for i, k in zip(idx, col):
                if not 1 <= k <= i + 1:
                    raise ValueError(f"k_{i}={k} out of range 1..{i + 1}")
            if any(a >= b for a, b in zip(col, col[1:])):
                raise ValueError(f"column {col} is not strictly increasing")

    @property
    def rank(self) -> int:
        return self.parabolic.n - 1

    def slot_entries(self) -> Iterator[tuple[int, int]]:
        for col, idx in zip(self.columns, column_slots(self.parabolic)):
            yield from zip(idx, col)

    def descending_code(self) -> DescendingCode:
        entries = list(range(2, self.rank + 2))
        for i, k in self.slot_entries():
            entries[i - 1] = k
        return DescendingCode(self.rank, tuple(entries))

    def column_permutations(self) -> list[Permutation]:
        """``[Pi_2, ..., Pi_a]`` as permutations of the full rank."""
        out = []
        for col, idx in zip(self.columns, column_slots(self.parabolic)):
            letters = [x for i, k in zip(idx, col) for x in cycle_letters(i, k)]
            out.append(ReducedWord(self.rank, tuple(letters)).evaluate())
        return out

    def column_cycles(self) -> list[list[tuple[int, ...]]]:
        return [
            [cycle_letters(i, k) for i, k in zip(idx, col)]
            for col, idx in zip(self.columns, column_slots(self.parabolic))
        ]

    def word(self) -> ReducedWord:
        letters = [x for col in self.column_cycles() for cyc in col for x in cyc]
        return ReducedWord(self.rank, tuple(letters))

    def render(self) -> str:
        """Compressed notation with ``|`` between columns, e.g. ``s321 s43 | s4``."""
        cols = []
        for col in self.column_cycles():
            body = " ".join(compress_cycle(c) for c in col if c)
            cols.append(body or "e")
        return " | ".join(cols) if cols else "e"

    def __str__(self) -> str:
        return ";".join(",".join(map(str, col)) for col in self.columns)

    def to_json(self) -> dict:
        return {"parabolic": self.parabolic.to_json(), "columns": [list(c) for c in self.columns]}

    @classmethod
    def from_json(cls, data: dict) -> CosetCode:
        return cls(Composition(tuple(data["parabolic"])), tuple(map(tuple, data["columns"])))


def parse_columns(text: str) -> tuple[tuple[int, ...], ...]:
    """Columns separated by ``;``, entries by ``,``: ``"1,3,5;1,4,7;1"``."""
    if not text.strip():
        return ()
    out = []
    for chunk in text.split(";"):
        toks = [t.strip() for t in chunk.split(",")]
        if not all(t.isascii() and t.isdigit() for t in toks):
            raise ValueError(f"malformed coset code {text!r}")
        out.append(tuple(int(t) for t in toks))
    return tuple(out)


def coset_count(parabolic: Composition) -> int:
    """``n! / (r_1! ... r_a!)``."""
    return math.factorial(parabolic.n) // math.prod(math.factorial(p) for p in parabolic)


def _increasing(slots: range, lo: int) -> Iterator[tuple[int, ...]]:
    if not slots:
        yield ()
        return
    i = slots[0]
    for k in range(lo, i + 2):
        for rest in _increasing(slots[1:], k + 1):
            yield (k,) + rest


def enumerate_coset_codes(parabolic: Composition) -> list[CosetCode]:
    """Every code satisfying the range and column-increasing conditions."""
    per_column = [list(_increasing(idx, 1)) for idx in column_slots(parabolic)]

    def product(j: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if j == len(per_column):
            yield ()
            return
        for col in per_column[j]:
            for rest in product(j + 1):
                yield (col,) + rest

    return [CosetCode(parabolic, cols) for cols in product(0)]


def coset_decode(code: CosetCode) -> Permutation:
    return code.descending_code().permutation()


def coset_key(w: Permutation, parabolic: Composition) -> tuple[int, ...]:
    """
    A complete invariant of the coset ``W(P) w``: the block label of
    ``w(x)`` for each position ``x``.
    """
    label = _block_labels(parabolic)
    return tuple(label[y] for y in w.images)


@functools.lru_cache(maxsize=None)
def _block_labels_cached(parts: tuple[int, ...]) -> tuple[int, ...]:
    label = [0]
    for b, p in enumerate(parts):
        label.extend([b] * p)
    return tuple(label)


def _block_labels(parabolic: Composition) -> tuple[int, ...]:
    return _block_labels_cached(parabolic.parts)


def block_sort(w: Permutation, parabolic: Composition) -> Permutation:
    """
    The element of ``W(P) w`` whose inverse is increasing on every block of
    values, i.e. ``w'^{-1}(alpha) > 0`` for each simple root of the Levi.
    """
    if w.rank + 1 != parabolic.n:
        raise ValueError(f"permutation of rank {w.rank} vs parabolic of {parabolic.n}")
    images = list(w.images)
    inv = w.inverse().images
    for block in parabolic.blocks():
        positions = sorted(inv[v - 1] for v in block)
        for pos, v in zip(positions, block):
            images[pos - 1] = v
    return Permutation(tuple(images))


def min_rep(w: Permutation, parabolic: Composition) -> CosetCode:
    """The coset code of the minimal-length element of ``W(P) w``."""
    full = encode(block_sort(w, parabolic))
    slots = column_slots(parabolic)
    covered = {i for idx in slots for i in idx}
    for i in range(1, full.rank + 1):
        if i not in covered and full[i] != i + 1:
            raise AssertionError(f"first-column slot {i} is not trivial in {full}")
    return CosetCode(parabolic, tuple(tuple(full[i] for i in idx) for idx in slots))


# --- the rewrite identity ---------------------------------------------------

@dataclass(frozen=True)
class Rewrite:
    lhs: ReducedWord
    rhs: ReducedWord

    @property
    def equal(self) -> bool:
        return self.lhs.evaluate() == self.rhs.evaluate()

    def to_json(self) -> dict:
        return {"lhs": list(self.lhs.letters), "rhs": list(self.rhs.letters), "equal": self.equal}


def _run(a: int, b: int) -> tuple[int, ...]:
    """``s_a s_{a-1} ... s_b`` (empty when a < b)."""
    return tuple(range(a, b - 1, -1))


def cycle_rewrite(i: int, j: int, k: Optional[int] = None,
                    rank: Optional[int] = None) -> Rewrite:
    """
    Both sides of ``(s_i..s_j)(s_{i+1}..s_k) = s_{i+1}(s_i..s_k)(s_{i+1}..s_{j+1})``
    for ``i >= j >= k``. Leaving ``k`` out gives the first form, ``k = j``.
    """
    if k is None:
        k = j
    if not i >= j >= k >= 1:
        raise ValueError(f"need i >= j >= k >= 1, got ({i}, {j}, {k})")
    if rank is None:
        rank = i + 1
    if i + 1 > rank:
        raise ValueError(f"s_{i + 1} does not exist in rank {rank}")
    lhs = _run(i, j) + _run(i + 1, k)
    rhs = (i + 1,) + _run(i, k) + _run(i + 1, j + 1)
    return Rewrite(ReducedWord(rank, lhs), ReducedWord(rank, rhs))


# --- the distinguished element w_mu -----------------------------------------

def construct_w_mu(mu: SortedPartition) -> CosetCode:
    """
    Build the unique coset code for ``transpose(mu)`` sending every simple
    root of the Levi of ``P_mu`` outside the Levi of ``P_{mu^T}``.

    Works from the rightmost column: the current diagram has ``c`` columns and
    its first ``r_c`` rows have full length ``c``; the column entries are the
    indices of the simple roots in the last column of those rows, i.e. the
    first root of each such row. Deleting that column gives the smaller
    problem.
    """
    if not isinstance(mu, SortedPartition):
        raise TypeError("construct_w_mu needs a SortedPartition")
    parabolic = transpose(mu)
    rows = list(mu.parts)
    columns = []
    for c in range(len(parabolic), 1, -1):
        height = parabolic[c - 1]
        starts = []
        offset = 0
        for t in rows[:height]:
            starts.append(offset + 1)
            offset += t
        columns.append(tuple(starts))
        rows = [t - 1 if i < height else t for i, t in enumerate(rows)]
        rows = [t for t in rows if t > 0]
    columns.reverse()
    return CosetCode(parabolic, tuple(columns))


# --- R_l sets ---------------------------------------------------------------

class PositiveImageError(ValueError):
    """Some simple root of the Levi is sent to a positive root."""


@dataclass(frozen=True)
class RlDecomposition:
    sets: dict  # l -> RootSet, l = 2..a

    def __getitem__(self, l: int) -> RootSet:
        return self.sets[l]

    def to_json(self) -> dict:
        return {str(l): s.simple_indices() for l, s in sorted(self.sets.items())}


def rl_decomposition(code: CosetCode, lam: Composition) -> RlDecomposition:
    """
    Assign each ``alpha`` in the Levi simple roots of ``lam`` to ``R_l``, the
    column at which ``Pi_l ... Pi_a(alpha)`` first turns negative while
    ``Pi_{l+1} ... Pi_a(alpha)`` is still simple.
    """
    if lam.n != code.parabolic.n:
        raise ValueError("lambda and the parabolic partition different integers")
    rank = code.rank
    pis = code.column_permutations()
    a = len(pis) + 1
    boundaries = set(lam.boundaries())
    buckets: dict[int, set[Root]] = {l: set() for l in range(2, a + 1)}
    for t in range(1, rank + 1):
        if t in boundaries:
            continue
        alpha = Root.simple(t)
        image = alpha
        home = None
        for l in range(a, 1, -1):
            image = act_on_root(pis[l - 2], image)
            if image.is_negative:
                home = l
                break
            if not image.is_simple:
                raise PositiveImageError(f"{alpha} reaches the positive non-simple root {image}")
        if home is None:
            raise PositiveImageError(f"{alpha} is sent to the positive root {image}")
        buckets[home].add(alpha)
    return RlDecomposition({l: RootSet(rank, frozenset(s)) for l, s in buckets.items()})
