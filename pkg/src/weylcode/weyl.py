"""
The Weyl group of GL_{r+1}, realised as the symmetric group S_{r+1}.

Conventions used throughout the package:

- permutations are stored in one-line notation ``(w(1), ..., w(r+1))``;
- ``s_i`` is the transposition of ``i`` and ``i+1``;
- a word ``s_{i_1} s_{i_2} ... s_{i_N}`` is the composite function with the
  rightmost letter applied first;
- ``w(e_i - e_j) = e_{w(i)} - e_{w(j)}``.

A descending code ``(k_1, ..., k_r)`` with ``1 <= k_i <= i+1`` stands for the
product of descending cycles ``pi_{k_1} ... pi_{k_r}`` where
``pi_{k_i} = s_i s_{i-1} ... s_{k_i}`` (empty when ``k_i = i+1``). As a
permutation ``pi_{k_i}`` is the cycle ``i+1 -> i -> ... -> k_i -> i+1``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


# --- raw one-line helpers (0-based lists of 1-based values) -----------------

def _compose(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """(a o b)(x) = a(b(x)) on one-line tuples."""
    return tuple(a[y - 1] for y in b)


def _right_cycle(w: list[int], i: int, k: int) -> None:
    """In place: w <- w o pi_k where pi_k is the descending cycle at slot i."""
    if k == i + 1:
        return
    # pi_k: k -> i+1, x -> x-1 for k < x <= i+1
    head = w[i]  # w(i+1)
    for x in range(i + 1, k, -1):
        w[x - 1] = w[x - 2]
    w[k - 1] = head


def _inversions(images: Sequence[int]) -> int:
    n = len(images)
    return sum(
        1 for a in range(n) for b in range(a + 1, n) if images[a] > images[b]
    )


@dataclass(frozen=True)
class Permutation:
    """An element of S_{r+1} in one-line notation."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")

    @classmethod
    def identity(cls, rank: int) -> Permutation:
        return cls(tuple(range(1, rank + 2)))

    @classmethod
    def simple_reflection(cls, i: int, rank: int) -> Permutation:
        if not 1 <= i <= rank:
            raise ValueError(f"s_{i} does not exist in rank {rank}")
        images = list(range(1, rank + 2))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def longest(cls, rank: int) -> Permutation:
        return cls(tuple(range(rank + 1, 0, -1)))

    @classmethod
    def from_word(cls, letters: Iterable[int], rank: int) -> Permutation:
        return ReducedWord(rank, tuple(letters)).evaluate()

    @property
    def rank(self) -> int:
        return len(self.images) - 1

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.rank != other.rank:
            raise ValueError("cannot multiply permutations of different rank")
        return Permutation(_compose(self.images, other.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    def extend(self, rank: int) -> Permutation:
        """Embed into a larger symmetric group by adding fixed points."""
        if rank < self.rank:
            raise ValueError("cannot embed into a smaller rank")
        return Permutation(self.images + tuple(range(len(self.images) + 1, rank + 2)))

    def length(self) -> int:
        return _inversions(self.images)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    def __str__(self) -> str:
        return " ".join(map(str, self.images))

    def to_json(self) -> dict:
        return {"images": list(self.images)}


def length(w: Permutation) -> int:
    """Number of inversions ``#{(i, j) : i < j, w(i) > w(j)}``."""
    return w.length()


@dataclass(frozen=True)
class ReducedWord:
    """A word in the simple reflections ``s_1, ..., s_rank``."""

    rank: int
    letters: tuple[int, ...]

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        for x in letters:
            if not 1 <= x <= self.rank:
                raise ValueError(f"letter s_{x} out of range for rank {self.rank}")

    def __len__(self) -> int:
        return len(self.letters)

    def evaluate(self) -> Permutation:
        images = list(range(1, self.rank + 2))
        # w <- w o s_x for each letter, left to right
        for x in self.letters:
            images[x - 1], images[x] = images[x], images[x - 1]
        return Permutation(tuple(images))

    def is_reduced(self) -> bool:
        return len(self.letters) == self.evaluate().length()

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(f"s{x}" for x in self.letters)

    def to_json(self) -> dict:
        return {"rank": self.rank, "letters": list(self.letters)}


def parse_word(text: str) -> tuple[int, ...]:
    """
    Parse ``"s3 s2 s1"`` or ``"3 2 1"``; ``"e"`` or an empty string is the
    empty word.
    """
    out = []
    for tok in text.split():
        if tok == "e":
            continue
        body = tok[1:] if tok.startswith("s") else tok
        if not body or not (body.isascii() and body.isdigit()):
            raise ValueError(f"malformed word token {tok!r}")
        out.append(int(body))
    return tuple(out)


def parse_permutation(text: str) -> Permutation:
    toks = text.replace(",", " ").split()
    if not toks or not all(t.isascii() and t.isdigit() for t in toks):
        raise ValueError(f"malformed permutation {text!r}")
    return Permutation(tuple(int(t) for t in toks))


def cycle_letters(i: int, k: int) -> tuple[int, ...]:
    """Letters of ``pi_k`` at slot i: ``(i, i-1, ..., k)``; empty if k = i+1."""
    if not 1 <= k <= i + 1:
        raise ValueError(f"k={k} out of range 1..{i + 1} at slot {i}")
    return tuple(range(i, k - 1, -1))


def compress_cycle(letters: Sequence[int]) -> str:
    """
    Render a cycle in compressed form, e.g. ``s321``. Multi-digit letters
    fall back to a dotted form ``s(11.10.9)``.
    """
    if not letters:
        return "e"
    if all(x < 10 for x in letters):
        return "s" + "".join(map(str, letters))
    return "s(" + ".".join(map(str, letters)) + ")"


@dataclass(frozen=True)
class DescendingCode:
    """A code ``(k_1, ..., k_r)`` with ``1 <= k_i <= i+1``."""

    rank: int
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.rank:
            raise ValueError(f"a rank {self.rank} code needs {self.rank} entries")
        for i, k in enumerate(entries, start=1):
            if not 1 <= k <= i + 1:
                raise ValueError(f"k_{i}={k} out of range 1..{i + 1}")

    @classmethod
    def identity(cls, rank: int) -> DescendingCode:
        return cls(rank, tuple(range(2, rank + 2)))

    def __getitem__(self, i: int) -> int:
        """1-based access ``code[i] == k_i``."""
        return self.entries[i - 1]

    def length(self) -> int:
        return sum(i + 1 - k for i, k in enumerate(self.entries, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        return [cycle_letters(i, k) for i, k in enumerate(self.entries, start=1)]

    def word(self) -> ReducedWord:
        return ReducedWord(self.rank, tuple(itertools.chain.from_iterable(self.cycles())))

    def permutation(self) -> Permutation:
        images = list(range(1, self.rank + 2))
        for i, k in enumerate(self.entries, start=1):
            _right_cycle(images, i, k)
        return Permutation(tuple(images))

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))

    def to_json(self) -> dict:
        return {"rank": self.rank, "code": list(self.entries)}


def decode(code: DescendingCode) -> tuple[ReducedWord, Permutation]:
    """
    The word ``pi_{k_1} ... pi_{k_r}`` and the permutation it evaluates to.

    >>> str(decode(DescendingCode(2, (1, 1)))[0])
    's1 s2 s1'
    """
    return code.word(), code.permutation()


def encode(w: Permutation) -> DescendingCode:
    """
    Inverse of :func:`decode`. Peels off the last cycle with
    ``k_r = w^{-1}(r+1)`` and recurses on ``w o pi_{k_r}^{-1}``, which fixes
    ``r+1``.

    >>> encode(Permutation((3, 2, 1))).entries
    (1, 1)
    """
    r = w.rank
    images = list(w.images)
    entries = [0] * r
    for i in range(r, 0, -1):
        k = images.index(i + 1) + 1
        entries[i - 1] = k
        # images <- images o pi_k^{-1}; pi_k^{-1}: i+1 -> k, x -> x+1 (k <= x <= i)
        if k != i + 1:
            moved = images[k - 1]
            for x in range(k, i + 1):
                images[x - 1] = images[x]
            images[i] = moved
    return DescendingCode(r, tuple(entries))


def enumerate_codes(rank: int) -> Iterator[DescendingCode]:
    """All (rank+1)! descending codes in lexicographic order."""
    ranges = [range(1, i + 2) for i in range(1, rank + 1)]
    for entries in itertools.product(*ranges):
        yield DescendingCode(rank, entries)


# --- roots -------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Root:
    """The root ``e_i - e_j`` of type A."""

    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j or self.i < 1 or self.j < 1:
            raise ValueError(f"invalid root indices ({self.i}, {self.j})")

    @classmethod
    def simple(cls, k: int) -> Root:
        return cls(k, k + 1)

    @classmethod
    def span(cls, a: int, b: int) -> Root:
        """The positive root ``alpha_a + alpha_{a+1} + ... + alpha_b``."""
        return cls(a, b + 1)

    @property
    def is_positive(self) -> bool:
        return self.i < self.j

    @property
    def is_negative(self) -> bool:
        return self.i > self.j

    @property
    def is_simple(self) -> bool:
        return self.j == self.i + 1

    @property
    def height(self) -> int:
        return self.j - self.i

    def __neg__(self) -> Root:
        return Root(self.j, self.i)

    def coefficients(self, rank: int) -> tuple[int, ...]:
        """Coordinates in the basis ``alpha_1, ..., alpha_rank``."""
        lo, hi = min(self.i, self.j), max(self.i, self.j)
        if hi > rank + 1:
            raise ValueError(f"root {self} does not live in rank {rank}")
        sign = 1 if self.is_positive else -1
        return tuple(sign if lo <= t < hi else 0 for t in range(1, rank + 1))

    def __str__(self) -> str:
        lo, hi = min(self.i, self.j), max(self.i, self.j)
        body = "+".join(f"a{t}" for t in range(lo, hi))
        if self.is_positive:
            return body
        return f"-{body}" if hi - lo == 1 else f"-({body})"

    def to_json(self) -> list[int]:
        return [self.i, self.j]


def parse_root(text: str) -> Root:
    """``"i,j"`` for ``e_i - e_j``, or ``"a3"`` for a simple root."""
    text = text.strip()
    if text.startswith("a") and text[1:].isdigit():
        return Root.simple(int(text[1:]))
    parts = text.split(",")
    if len(parts) != 2 or not all(p.strip().isdigit() for p in parts):
        raise ValueError(f"malformed root {text!r}")
    return Root(int(parts[0]), int(parts[1]))


@dataclass(frozen=True)
class RootSet:
    rank: int
    members: frozenset[Root]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        for rt in self.members:
            if max(rt.i, rt.j) > self.rank + 1:
                raise ValueError(f"root {rt} does not live in rank {self.rank}")

    def __contains__(self, rt: Root) -> bool:
        return rt in self.members

    def __iter__(self) -> Iterator[Root]:
        return iter(sorted(self.members, key=lambda rt: (min(rt.i, rt.j), rt.height, rt.i)))

    def __len__(self) -> int:
        return len(self.members)

    def __le__(self, other: RootSet) -> bool:
        return self.members <= other.members

    def simple_indices(self) -> list[int]:
        return sorted(rt.i for rt in self.members if rt.is_simple)

    def to_json(self) -> list[list[int]]:
        return [rt.to_json() for rt in self]


def simple_roots(rank: int) -> RootSet:
    return RootSet(rank, frozenset(Root.simple(k) for k in range(1, rank + 1)))


def positive_roots(rank: int) -> RootSet:
    n = rank + 1
    return RootSet(rank, frozenset(
        Root(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
    ))


def act_on_root(w: Permutation, root: Root) -> Root:
    """
    >>> str(act_on_root(Permutation.from_word([4, 3, 2], 5), Root.simple(1)))
    'a1+a2+a3+a4'
    """
    return Root(w(root.i), w(root.j))


def cycle_action(i: int, j: int, k: int, rank: Optional[int] = None) -> Root:
    """
    Closed form of ``s_j s_{j-1} ... s_i (alpha_k)`` for ``i <= j``:

    ====================  ==============================
    ``k <= i-2``/``k >= j+2``  ``alpha_k``
    ``k = i-1``           ``alpha_{i-1} + ... + alpha_j``
    ``k = i``             ``-(alpha_i + ... + alpha_j)``
    ``i+1 <= k <= j``     ``alpha_{k-1}``
    ``k = j+1``           ``alpha_j + alpha_{j+1}``
    ====================  ==============================
    """
    if not 1 <= i <= j:
        raise ValueError(f"need 1 <= i <= j, got i={i}, j={j}")
    if k < 1:
        raise ValueError(f"k={k} must be positive")
    if rank is not None and (j > rank or k > rank):
        raise ValueError(f"indices exceed rank {rank}")
    if k <= i - 2 or k >= j + 2:
        return Root.simple(k)
    if k == i - 1:
        return Root.span(i - 1, j)
    if k == i:
        return -Root.span(i, j)
    if k <= j:
        return Root.simple(k - 1)
    return Root.span(j, j + 1)


def negative_simple_set(w: Permutation, subset: RootSet) -> RootSet:
    """The members ``alpha`` of a set of simple roots with ``w(alpha) < 0``."""
    out = []
    for rt in subset.members:
        if not rt.is_simple:
            raise ValueError(f"{rt} is not a simple root")
        if w(rt.i) > w(rt.j):
            out.append(rt)
    return RootSet(subset.rank, frozenset(out))
