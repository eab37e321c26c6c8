"""
Unipotent-orbit combinatorics for GL_n and two verdicts built on it:
whether a semi-Whittaker coefficient of the degenerate Eisenstein series
attached to ``mu`` is forced to vanish, and the certificate that the orbit
attached to that series is ``mu`` itself.

Everything here is combinatorial. A coefficient is represented by its support
over the minimal coset representatives: the ``w`` with ``w(Delta_lambda)``
entirely negative.
"""
from __future__ import annotations

import enum
import functools
import heapq
from dataclasses import dataclass, field
from typing import Optional

from .cosets import CosetCode, coset_decode, construct_w_mu, enumerate_coset_codes
from .partitions import (
    Composition,
    DominanceVerdict,
    Relation,
    SortedPartition,
    dominance_compare,
    enumerate_partitions,
    partial_sum_violation,
    transpose,
)
from .weyl import Root, RootSet, positive_roots


@dataclass(frozen=True)
class OrbitTorus:
    orbit: SortedPartition
    exponents: tuple[int, ...]

    def weight(self, root: Root) -> int:
        return self.exponents[root.i - 1] - self.exponents[root.j - 1]

    def __str__(self) -> str:
        return ",".join(map(str, self.exponents))

    def to_json(self) -> dict:
        return {"orbit": self.orbit.to_json(), "exponents": list(self.exponents)}


def torus_exponents(orbit: SortedPartition) -> OrbitTorus:
    """
    Powers of ``t`` on the diagonal of ``h_O(t)``: each part ``p`` contributes
    ``p-1, p-3, ..., 1-p`` and the lot is sorted decreasingly.

    >>> str(torus_exponents(SortedPartition((3, 3, 1))))
    '2,2,0,0,0,-2,-2'
    """
    if not isinstance(orbit, SortedPartition):
        if not orbit.is_sorted():
            raise ValueError(f"orbit {orbit} is not a sorted partition")
        orbit = orbit.sorted()
    runs = [range(p - 1, -p, -2) for p in orbit]
    exps = tuple(heapq.merge(*runs, reverse=True))
    return OrbitTorus(orbit, exps)


def root_weight(torus: OrbitTorus, root: Root) -> int:
    """The ``m`` with ``h(t) x_root(a) h(t)^{-1} = x_root(t^m a)``."""
    n = len(torus.exponents)
    if max(root.i, root.j) > n:
        raise ValueError(f"root {root} does not live in GL_{n}")
    return torus.weight(root)


def u_level(orbit: SortedPartition, level: int) -> RootSet:
    """Positive roots of weight at least ``level``."""
    if level < 0:
        raise ValueError("level must be non-negative")
    torus = torus_exponents(orbit)
    rank = orbit.n - 1
    return RootSet(rank, frozenset(
        rt for rt in positive_roots(rank) if torus.weight(rt) >= level
    ))


def delta_lambda(lam: Composition) -> RootSet:
    """Simple roots ``alpha_i`` with ``i`` not a block boundary of ``lam``."""
    cuts = set(lam.boundaries())
    rank = lam.n - 1
    return RootSet(rank, frozenset(
        Root.simple(i) for i in range(1, rank + 1) if i not in cuts
    ))


def levi_negative_roots(parabolic: Composition) -> RootSet:
    """Negative roots ``e_i - e_j`` (``i > j``) inside one block."""
    return RootSet(parabolic.n - 1, frozenset(
        Root(i, j) for block in parabolic.blocks() for i in block for j in block if i > j
    ))


def column_sets(lam: Composition) -> dict[int, RootSet]:
    """
    ``Q_c`` for c >= 2: fill row ``i`` of the diagram of ``lam`` with its
    simple roots from right to left; ``Q_c`` is what lands in column ``c``.
    """
    rank = lam.n - 1
    out: dict[int, set[Root]] = {c: set() for c in range(2, max(lam.parts) + 1)}
    offset = 0
    for p in lam:
        for c in range(2, p + 1):
            out[c].add(Root.simple(offset + p - c + 1))
        offset += p
    return {c: RootSet(rank, frozenset(s)) for c, s in out.items()}


# --- supports ----------------------------------------------------------------

def _mask(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class _Table:
    codes: tuple[CosetCode, ...]
    negative: tuple[int, ...]
    outside: tuple[int, ...]


@functools.lru_cache(maxsize=64)
def _support_table(parabolic: tuple[int, ...]) -> _Table:
    """
    For every coset representative: the bitmask of simple roots ``alpha_t``
    sent negative, and of those sent to a negative root outside the Levi.
    ``w(alpha_t) = e_{w(t)} - e_{w(t+1)}``, so these are descents of ``w``.
    """
    comp = Composition(parabolic)
    label = []
    for b, p in enumerate(parabolic):
        label.extend([b] * p)
    codes = tuple(enumerate_coset_codes(comp))
    negative, outside = [], []
    for code in codes:
        w = coset_decode(code).images
        neg = out = 0
        for t in range(1, len(w)):
            if w[t - 1] > w[t]:
                neg |= 1 << t
                if label[w[t - 1] - 1] != label[w[t] - 1]:
                    out |= 1 << t
        negative.append(neg)
        outside.append(out)
    return _Table(codes, tuple(negative), tuple(outside))


def support_sets(parabolic: Composition, lam: Composition) -> tuple[list[CosetCode], list[CosetCode]]:
    """
    The representatives ``w`` for ``parabolic`` with ``w(Delta_lambda)``
    negative, and the sub-list whose images also avoid the Levi.
    """
    if parabolic.n != lam.n:
        raise ValueError("partitions of different integers")
    table = _support_table(parabolic.parts)
    need = _mask(rt.i for rt in delta_lambda(lam).members)
    support, refined = [], []
    for code, neg, out in zip(table.codes, table.negative, table.outside):
        if neg & need == need:
            support.append(code)
            if out & need == need:
                refined.append(code)
    return support, refined


class Verdict(enum.Enum):
    VANISHES = "vanishes"
    NONVANISHING = "nonvanishing"


@dataclass(frozen=True)
class SupportReport:
    mu: SortedPartition
    lam: Composition
    verdict: Verdict
    violation_index: Optional[int]
    support: tuple[CosetCode, ...]
    refined_support: tuple[CosetCode, ...]

    def problems(self) -> list[str]:
        """Broken invariants; empty when the report is coherent."""
        out = []
        if self.verdict is Verdict.VANISHES and self.support:
            out.append(f"criterion says vanishes but {len(self.support)} representatives survive")
        if self.lam.parts == self.mu.parts:
            expected = (construct_w_mu(self.mu),)
            if self.support != expected:
                out.append("support at lambda = mu is not exactly {w_mu}")
            if self.refined_support != expected:
                out.append("refined support at lambda = mu is not exactly {w_mu}")
        return out

    def to_json(self) -> dict:
        return {
            "mu": self.mu.to_json(),
            "lambda": self.lam.to_json(),
            "verdict": self.verdict.value,
            "violation_index": self.violation_index,
            "support": [c.to_json() for c in self.support],
            "refined_support": [c.to_json() for c in self.refined_support],
        }


def semiwhittaker_verdict(mu: SortedPartition, lam: Composition) -> SupportReport:
    """
    >>> from .partitions import partition, composition
    >>> semiwhittaker_verdict(partition("3,3"), composition("4,1,1")).verdict
    <Verdict.VANISHES: 'vanishes'>
    """
    if mu.n != lam.n:
        raise ValueError(f"partitions of different integers: {mu.n} vs {lam.n}")
    if not isinstance(mu, SortedPartition):
        mu = SortedPartition(mu.parts)
    index = partial_sum_violation(lam, mu)
    support, refined = support_sets(transpose(mu), lam)
    return SupportReport(
        mu=mu,
        lam=lam,
        verdict=Verdict.VANISHES if index is not None else Verdict.NONVANISHING,
        violation_index=index,
        support=tuple(support),
        refined_support=tuple(refined),
    )


# --- the attached orbit -----------------------------------------------------

@dataclass(frozen=True)
class CertificateRow:
    orbit: SortedPartition
    dominance: DominanceVerdict
    verdict: Verdict
    support_size: int
    consistent: bool

    def to_json(self) -> dict:
        return {
            "orbit": self.orbit.to_json(),
            "dominance": self.dominance.relation.value,
            "verdict": self.verdict.value,
            "support_size": self.support_size,
            "consistent": self.consistent,
        }


@dataclass(frozen=True)
class OrbitCertificate:
    mu: SortedPartition
    rows: tuple[CertificateRow, ...] = field(default_factory=tuple)

    @property
    def consistent(self) -> bool:
        return all(row.consistent for row in self.rows)

    @property
    def attached_orbit(self) -> Optional[SortedPartition]:
        """``mu`` when the certificate checks out, otherwise ``None``."""
        return self.mu if self.consistent else None

    def to_json(self) -> list[dict]:
        return [row.to_json() for row in self.rows]


def certificate_row(mu: SortedPartition, orbit: SortedPartition,
                    report: Optional[SupportReport] = None) -> CertificateRow:
    """
    Compare dominance of ``orbit`` against ``mu`` with the vanishing verdict
    at ``lambda = orbit``. ``report`` may be supplied precomputed.
    """
    dom = dominance_compare(orbit, mu)
    if report is None:
        report = semiwhittaker_verdict(mu, orbit)
    # vanishing must happen exactly for orbits not below mu
    ok = (report.verdict is Verdict.VANISHES) == (
        dom.relation in (Relation.GREATER, Relation.INCOMPARABLE)
    )
    ok = ok and not report.problems()
    if dom.relation is Relation.EQUAL:
        ok = ok and report.verdict is Verdict.NONVANISHING and bool(report.refined_support)
    return CertificateRow(orbit, dom, report.verdict, len(report.support), ok)


def attached_orbit_certificate(mu: SortedPartition) -> OrbitCertificate:
    """One row per partition of ``n`` comparing dominance with vanishing."""
    return OrbitCertificate(mu, tuple(
        certificate_row(mu, orbit) for orbit in enumerate_partitions(mu.n)
    ))
