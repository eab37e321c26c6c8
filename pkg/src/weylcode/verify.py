"""
Exhaustive sweeps that check the library against brute force within fixed bounds.

Every check returns a :class:`VerificationReport`. Counterexamples carry
their inputs in the same JSON shapes the CLI reads, so any failure can be
replayed by hand. Passing ``mutation_seed`` perturbs exactly one input of the
sweep (chosen by the seed); a sound check must then report a failure.
"""
from __future__ import annotations

import itertools
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from .cosets import (
    CosetCode,
    coset_count,
    coset_decode,
    coset_key,
    construct_w_mu,
    enumerate_coset_codes,
    cycle_rewrite,
    min_rep,
)
from .orbits import (
    Verdict,
    _support_table,
    certificate_row,
    delta_lambda,
    semiwhittaker_verdict,
    torus_exponents,
    u_level,
)
from .partitions import (
    Composition,
    Relation,
    SortedPartition,
    dominance_compare,
    enumerate_compositions,
    enumerate_partitions,
    partial_sum_bound,
    partial_sum_violation,
    transpose,
)
from .weyl import (
    DescendingCode,
    Permutation,
    ReducedWord,
    Root,
    _inversions,
    act_on_root,
    cycle_action,
    cycle_letters,
    decode,
    encode,
    enumerate_codes,
    positive_roots,
)


@dataclass
class VerificationReport:
    check: str
    scope: dict
    cases: int = 0
    failures: list = field(default_factory=list)
    ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, what: str, inputs: dict, observed: Any = None, expected: Any = None):
        self.failures.append(
            {"what": what, "inputs": inputs, "observed": observed, "expected": expected}
        )

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "scope": self.scope,
            "cases": self.cases,
            "failures": self.failures,
            "ms": round(self.ms, 3),
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} counterexamples)"
        return f"{self.check}: {status}, {self.cases} cases, {self.ms:.0f} ms"


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.ms = (time.perf_counter() - start) * 1000.0
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    wrapper.__wrapped__ = fn
    return wrapper


def _other_value(rng: random.Random, lo: int, hi: int, avoid: int) -> int:
    return rng.choice([v for v in range(lo, hi + 1) if v != avoid])


def _move_box_up(mu: SortedPartition) -> SortedPartition:
    """Move one box from the last row to the first row."""
    parts = list(mu.parts)
    parts[0] += 1
    parts[-1] -= 1
    return SortedPartition(tuple(p for p in parts if p > 0))


# --- descending decomposition -----------------------------------------------

@_timed
def verify_pi_bijection(max_rank: int = 6, mutation_seed: Optional[int] = None) -> VerificationReport:
    """Decode every code of rank <= max_rank: injective, reduced, invertible."""
    if max_rank < 1:
        raise ValueError("max_rank must be at least 1")
    report = VerificationReport("pi_bijection", {"max_rank": max_rank, "per_rank": {}})
    rng = random.Random(mutation_seed)
    target = None
    if mutation_seed is not None:
        r = rng.randint(1, max_rank)
        target = (r, rng.randrange(math.factorial(r + 1)))
    for r in range(1, max_rank + 1):
        seen: dict[tuple[int, ...], tuple[int, ...]] = {}
        count = 0
        for idx, code in enumerate(enumerate_codes(r)):
            used = code
            if target == (r, idx):
                slot = rng.randint(1, r)
                entries = list(code.entries)
                entries[slot - 1] = _other_value(rng, 1, slot + 1, entries[slot - 1])
                used = DescendingCode(r, tuple(entries))
            word, perm = decode(used)
            count += 1
            inputs = code.to_json()
            if perm.images in seen:
                report.fail("two codes decode to the same permutation", inputs,
                            perm.to_json(), {"distinct_from": list(seen[perm.images])})
            seen[perm.images] = code.entries
            inv = perm.length()
            if not (len(word) == inv == code.length()):
                report.fail("decoded word is not reduced", inputs,
                            {"letters": len(word), "inversions": inv}, code.length())
            if encode(perm) != code:
                report.fail("encode does not invert decode", inputs,
                            encode(perm).to_json(), inputs)
        if count != math.factorial(r + 1) or len(seen) != count:
            report.fail("wrong number of group elements", {"rank": r},
                        len(seen), math.factorial(r + 1))
        report.scope["per_rank"][r] = count
        report.cases += count
    return report


# --- coset representatives --------------------------------------------------

def _longest_descent_run(images: tuple[int, ...]) -> int:
    best = run = 0
    for a, b in zip(images, images[1:]):
        run = run + 1 if a > b else 0
        best = max(best, run)
    return best


@_timed
def verify_coset_representatives(max_n: int = 7, mutation_seed: Optional[int] = None) -> VerificationReport:
    """
    For every composition of every n <= max_n: the coset codes have the right
    count, hit each coset once, and decode to the strictly shortest element
    of their coset (found by scanning all of S_n).
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    report = VerificationReport("coset_representatives", {"max_n": max_n})
    rng = random.Random(mutation_seed)
    target = None
    if mutation_seed is not None:
        n = rng.randint(max(2, min(max_n, 2)), max(max_n, 2))
        comps = [c for c in enumerate_compositions(n) if len(c) >= 2]
        comp = rng.choice(comps)
        target = (comp, rng.randrange(coset_count(comp)))
    for n in range(1, max_n + 1):
        group = [(p, _inversions(p)) for p in itertools.permutations(range(1, n + 1))]
        for comp in enumerate_compositions(n):
            best: dict[tuple[int, ...], list] = {}
            for p, ell in group:
                key = _key(p, comp)
                entry = best.get(key)
                if entry is None or ell < entry[1]:
                    best[key] = [p, ell, 1]
                elif ell == entry[1]:
                    entry[2] += 1
            codes = enumerate_coset_codes(comp)
            if len(codes) != coset_count(comp) or len(best) != len(codes):
                report.fail("wrong number of representatives", {"parabolic": comp.to_json()},
                            len(codes), coset_count(comp))
            hit: dict[tuple[int, ...], CosetCode] = {}
            columns = len(comp)
            for idx, code in enumerate(codes):
                report.cases += 1
                inputs = code.to_json()
                full = code.descending_code()
                if target is not None and target == (comp, idx):
                    i = rng.choice([i for i, _ in code.slot_entries()])
                    entries = list(full.entries)
                    entries[i - 1] = _other_value(rng, 1, i + 1, entries[i - 1])
                    full = DescendingCode(full.rank, tuple(entries))
                w = full.permutation()
                key = _key(w.images, comp)
                if key in hit:
                    report.fail("two codes land in the same coset", inputs,
                                w.to_json(), {"already": hit[key].to_json()})
                hit[key] = code
                shortest, ell, ties = best[key]
                if w.images != shortest or ties != 1:
                    report.fail("representative is not the unique shortest in its coset",
                                inputs, {"images": list(w.images), "length": w.length()},
                                {"images": list(shortest), "length": ell})
                if encode(w) != code.descending_code():
                    report.fail("full descending code differs from the coset code",
                                inputs, encode(w).to_json(), code.descending_code().to_json())
                elif min_rep(w, comp) != code:
                    report.fail("min_rep is not idempotent", inputs,
                                min_rep(w, comp).to_json(), inputs)
                if _longest_descent_run(w.images) > columns - 1:
                    report.fail("a run of consecutive simple roots is all sent negative",
                                inputs, _longest_descent_run(w.images), columns - 1)
    return report


def _key(images, comp: Composition) -> tuple[int, ...]:
    return coset_key(Permutation(tuple(images)), comp)


@_timed
def verify_cycle_rewrite(max_rank: int = 10, mutation_seed: Optional[int] = None) -> VerificationReport:
    """Both forms of the cycle rewrite identity for every admissible (i, j, k)."""
    report = VerificationReport("cycle_rewrite", {"max_rank": max_rank})
    cases = [
        (r, i, j, k)
        for r in range(2, max_rank + 1)
        for i in range(1, r)
        for j in range(1, i + 1)
        for k in range(1, j + 1)
    ]
    rng = random.Random(mutation_seed)
    target = None
    if mutation_seed is not None:
        target = rng.choice([c for c in cases if c[2] >= 2])
    for case in cases:
        r, i, j, k = case
        rw = cycle_rewrite(i, j, k, rank=r)
        rhs = rw.rhs
        if case == target:
            rhs = cycle_rewrite(i, j, _other_value(rng, 1, j, k), rank=r).rhs
        report.cases += 1
        if rw.lhs.evaluate() != rhs.evaluate():
            report.fail("rewrite identity fails", {"rank": r, "i": i, "j": j, "k": k},
                        list(rhs.letters), list(rw.lhs.letters))
    return report


# --- partitions -------------------------------------------------------------

@_timed
def verify_partial_sum_bound(max_n: int = 12, mutation_seed: Optional[int] = None) -> VerificationReport:
    """The partial-sum bound for all compositions and (l, k); equality cases."""
    report = VerificationReport("partial_sum_bound", {"max_n": max_n})
    rng = random.Random(mutation_seed)
    target = None
    if mutation_seed is not None:
        n = rng.randint(2, max(2, max_n))
        lam = rng.choice([p for p in enumerate_partitions(n) if len(p) >= 2])
        target = (lam.parts, rng.randint(1, len(lam) - 1))
    for n in range(1, max_n + 1):
        for lam in enumerate_compositions(n):
            q = transpose(lam).parts
            sorted_ = lam.is_sorted()
            for l in range(1, len(lam) + 1):
                for k in range(1, len(q) + 1):
                    chk = partial_sum_bound(lam, l, k)
                    lhs = chk.lhs
                    eq_case = sorted_ and l < len(lam) and k == lam[l]
                    if eq_case and target == (lam.parts, l):
                        lhs = sum(lam.parts[:l]) + 1  # p_1 bumped by one
                    report.cases += 1
                    inputs = {"lambda": lam.to_json(), "l": l, "k": k}
                    if lhs > chk.rhs:
                        report.fail("bound fails", inputs, lhs, {"at_most": chk.rhs})
                    if eq_case and lhs != chk.rhs:
                        report.fail("equality case fails", inputs, lhs, chk.rhs)
    return report


@_timed
def verify_partitions(max_n: int = 10, mutation_seed: Optional[int] = None) -> VerificationReport:
    """Transpose is an involution and reverses dominance; the violation index
    exists exactly when dominance is Greater or Incomparable."""
    report = VerificationReport("partitions", {"max_n": max_n})
    rng = random.Random(mutation_seed)
    target = None
    if mutation_seed is not None:
        n = rng.randint(2, max(2, max_n))
        target = rng.choice([p for p in enumerate_partitions(n) if len(p) >= 2]).parts
    for n in range(1, max_n + 1):
        parts = enumerate_partitions(n)
        for a in parts:
            report.cases += 1
            back = transpose(transpose(_move_box_up(a) if a.parts == target else a))
            if back != a:
                report.fail("transpose is not an involution", {"partition": a.to_json()},
                            back.to_json(), a.to_json())
        for a in parts:
            ta = transpose(a)
            for b in parts:
                report.cases += 1
                rel = dominance_compare(a, b).relation
                rel_t = dominance_compare(transpose(b), ta).relation
                if (rel in (Relation.GREATER, Relation.EQUAL)) != (
                    rel_t in (Relation.GREATER, Relation.EQUAL)
                ):
                    report.fail("transpose does not reverse dominance",
                                {"a": a.to_json(), "b": b.to_json()}, rel_t.value, rel.value)
                has = partial_sum_violation(Composition(a.parts), b) is not None
                if has != (rel in (Relation.GREATER, Relation.INCOMPARABLE)):
                    report.fail("violation index disagrees with dominance",
                                {"lambda": a.to_json(), "mu": b.to_json()}, has, rel.value)
    return report


# --- root action ------------------------------------------------------------

def _cycle_perm(rank: int, i: int, k: int) -> Permutation:
    return ReducedWord(rank, cycle_letters(i, k)).evaluate()


@_timed
def verify_root_action(max_rank: int = 6, closed_form_rank: int = 8,
                       mutation_seed: Optional[int] = None) -> VerificationReport:
    """
    The closed form for ``s_j ... s_i (alpha_k)`` against direct evaluation,
    and for every product of consecutive cycles ``pi_{k_i} ... pi_{k_j}``:
    negative images persist, positive non-simple images persist, at most
    ``j-i+1`` simple roots turn negative, and strictly increasing codes
    shift ``alpha_l`` to ``alpha_{l+i-j-1}`` for ``k_j < l <= j``.
    """
    if max_rank < 1:
        raise ValueError("max_rank must be at least 1")
    report = VerificationReport("root_action",
                                {"max_rank": max_rank, "closed_form_rank": closed_form_rank})
    rng = random.Random(mutation_seed)
    closed = [
        (r, i, j, k)
        for r in range(2, closed_form_rank + 1)
        for i in range(1, r + 1)
        for j in range(i, r + 1)
        for k in range(1, r + 1)
    ]
    target = rng.choice(closed) if mutation_seed is not None else None
    for case in closed:
        r, i, j, k = case
        w = ReducedWord(r, tuple(range(j, i - 1, -1))).evaluate()
        probe = _other_value(rng, 1, r, k) if case == target else k
        direct = act_on_root(w, Root.simple(probe))
        formula = cycle_action(i, j, k, rank=r)
        report.cases += 1
        if direct != formula:
            report.fail("closed form disagrees with direct action",
                        {"rank": r, "i": i, "j": j, "k": k}, str(formula), str(direct))

    for r in range(1, max_rank + 1):
        cycles = {(t, k): _cycle_perm(r, t, k) for t in range(1, r + 1) for k in range(1, t + 2)}
        for i in range(1, r + 1):
            for j in range(i, r + 1):
                for ks in itertools.product(*[range(1, t + 2) for t in range(i, j + 1)]):
                    report.cases += 1
                    last = cycles[(j, ks[-1])]
                    w = Permutation.identity(r)
                    for t, k in zip(range(i, j + 1), ks):
                        w = w * cycles[(t, k)]
                    inputs = {"rank": r, "i": i, "j": j, "ks": list(ks)}
                    negatives = 0
                    for l in range(1, r + 1):
                        alpha = Root.simple(l)
                        first = act_on_root(last, alpha)
                        full = act_on_root(w, alpha)
                        negatives += full.is_negative
                        if first.is_negative and not full.is_negative:
                            report.fail("negative image does not persist", dict(inputs, l=l),
                                        str(full), "negative")
                        if first.is_positive and not first.is_simple and not full.is_positive:
                            report.fail("positive non-simple image does not persist",
                                        dict(inputs, l=l), str(full), "positive")
                    if negatives > j - i + 1:
                        report.fail("too many simple roots sent negative", inputs,
                                    negatives, {"at_most": j - i + 1})
                    if all(a < b for a, b in zip(ks, ks[1:])):
                        for l in range(ks[-1] + 1, j + 1):
                            got = act_on_root(w, Root.simple(l))
                            want = Root.simple(l + i - j - 1)
                            if got != want:
                                report.fail("increasing code does not shift simple roots",
                                            dict(inputs, l=l), str(got), str(want))
    return report


# --- support sweeps ---------------------------------------------------

def _r_labels(code: CosetCode) -> list[Optional[int]]:
    """For each simple root index t (1-based; slot 0 unused), the column l at
    which Pi_l...Pi_a(alpha_t) first turns negative, or None."""
    pis = [p.images for p in code.column_permutations()]
    a = len(pis) + 1
    labels: list[Optional[int]] = [None]
    for t in range(1, code.rank + 1):
        x, y = t, t + 1
        label = None
        for l in range(a, 1, -1):
            x, y = pis[l - 2][x - 1], pis[l - 2][y - 1]
            if x > y:
                label = l
                break
            if y != x + 1:
                break
        labels.append(label)
    return labels


@_timed
def verify_supports(max_n: int = 8, mutation_seed: Optional[int] = None) -> VerificationReport:
    """
    For each sorted mu: no representative sends Delta_lambda negative when
    lambda has a partial-sum violation; at lambda = mu exactly w_mu does, and
    its images avoid the Levi. Every all-negative pair also satisfies the
    ordering of the R_l sets along consecutive simple roots.
    """
    report = VerificationReport("supports", {"max_n": max_n, "rl_pairs": 0})
    rng = random.Random(mutation_seed)
    target = None
    if mutation_seed is not None:
        n = rng.randint(2, max(2, max_n))
        target = rng.choice([m for m in enumerate_partitions(n) if len(m) >= 2])
    for n in range(1, max_n + 1):
        comps = enumerate_compositions(n)
        for mu in enumerate_partitions(n):
            table = _support_table(transpose(mu).parts)
            labels = [_r_labels(c) for c in table.codes]
            for lam in comps:
                report.cases += 1
                need = 0
                for rt in delta_lambda(lam).members:
                    need |= 1 << rt.i
                members = [idx for idx, neg in enumerate(table.negative) if neg & need == need]
                inputs = {"mu": mu.to_json(), "lambda": lam.to_json()}
                violation = partial_sum_violation(lam, mu)
                if violation is not None and members:
                    report.fail("representative survives despite a violation",
                                dict(inputs, violation_index=violation),
                                [table.codes[m].to_json() for m in members], [])
                if lam.parts == mu.parts:
                    built = construct_w_mu(_move_box_up(mu) if mu == target else mu)
                    refined = [m for m in members if table.outside[m] & need == need]
                    got = [table.codes[m] for m in members]
                    if got != [built] or refined != members:
                        report.fail("support at lambda = mu is not {w_mu}", inputs,
                                    [c.to_json() for c in got], [built.to_json()])
                inside = [t for t in range(1, n) if need >> t & 1]
                for m in members:
                    report.scope["rl_pairs"] += 1
                    lab = labels[m]
                    for t in inside:
                        if lab[t] is None:
                            report.fail("negative image not reached through simple roots",
                                        dict(inputs, code=table.codes[m].to_json(), t=t), None, "R_l")
                        elif (need >> (t + 1) & 1) and (lab[t + 1] is None or lab[t + 1] >= lab[t]):
                            report.fail("R_l ordering fails on consecutive simple roots",
                                        dict(inputs, code=table.codes[m].to_json(), t=t),
                                        [lab[t], lab[t + 1]], "strictly decreasing")
    return report


@_timed
def verify_torus(max_n: int = 10, mutation_seed: Optional[int] = None) -> VerificationReport:
    """Exponent vectors of h_O and the nested U_l(O) for all partitions."""
    report = VerificationReport("torus", {"max_n": max_n})
    rng = random.Random(mutation_seed)
    target = None
    if mutation_seed is not None:
        target = rng.choice(enumerate_partitions(rng.randint(1, max_n))).parts
    for n in range(1, max_n + 1):
        for orbit in enumerate_partitions(n):
            report.cases += 1
            probe = orbit
            if orbit.parts == target:
                probe = SortedPartition((orbit[0] + 1,) + orbit.parts[1:])
            exps = torus_exponents(probe).exponents
            expected = sorted((p - 1 - 2 * s for p in orbit for s in range(p)), reverse=True)
            inputs = {"orbit": orbit.to_json()}
            if list(exps) != expected or sum(exps) != 0:
                report.fail("torus exponents wrong", inputs, list(exps), expected)
            torus = torus_exponents(orbit)
            levels = [u_level(orbit, l) for l in range(4)]
            if levels[0].members != positive_roots(n - 1).members:
                report.fail("U_0 is not every positive root", inputs, len(levels[0]),
                            n * (n - 1) // 2)
            for l in range(3):
                if not levels[l + 1] <= levels[l]:
                    report.fail("U_l are not nested", dict(inputs, level=l + 1), None, None)
            for rt in positive_roots(n - 1):
                if torus.weight(-rt) > 0:
                    report.fail("negative root has positive weight",
                                dict(inputs, root=(-rt).to_json()), torus.weight(-rt), "<= 0")
    return report


@_timed
def verify_orbit_certificates(max_n: int = 8, mutation_seed: Optional[int] = None) -> VerificationReport:
    """Every sorted mu certifies itself as the attached orbit."""
    report = VerificationReport("orbit_certificates", {"max_n": max_n})
    rng = random.Random(mutation_seed)
    target = None
    if mutation_seed is not None:
        n = rng.randint(2, max(2, max_n))
        target = rng.choice([m for m in enumerate_partitions(n) if len(m) >= 2])
    for n in range(1, max_n + 1):
        parts = enumerate_partitions(n)
        for mu in parts:
            for orbit in parts:
                report.cases += 1
                probe = _move_box_up(mu) if (mu == target and orbit == mu) else orbit
                row = certificate_row(mu, orbit, semiwhittaker_verdict(mu, probe))
                if not row.consistent:
                    report.fail("certificate row inconsistent",
                                {"mu": mu.to_json(), "orbit": orbit.to_json()},
                                row.to_json(), "vanishes iff orbit is not below mu")
    return report


CHECKS: dict[str, Callable[..., VerificationReport]] = {
    "pi_bijection": verify_pi_bijection,
    "coset_representatives": verify_coset_representatives,
    "cycle_rewrite": verify_cycle_rewrite,
    "partial_sum_bound": verify_partial_sum_bound,
    "partitions": verify_partitions,
    "root_action": verify_root_action,
    "supports": verify_supports,
    "torus": verify_torus,
    "orbit_certificates": verify_orbit_certificates,
}

# which scope knob each check listens to
RANK_CHECKS = {"pi_bijection", "cycle_rewrite", "root_action"}
N_CHECKS = set(CHECKS) - RANK_CHECKS


def _run_one(name: str, max_rank: Optional[int], max_n: Optional[int],
             mutation_seed: Optional[int]) -> VerificationReport:
    kwargs: dict[str, Any] = {"mutation_seed": mutation_seed}
    if name in RANK_CHECKS and max_rank is not None:
        kwargs["max_rank"] = max_rank
    if name in N_CHECKS and max_n is not None:
        kwargs["max_n"] = max_n
    return CHECKS[name](**kwargs)


def run_checks(names=None, max_rank: Optional[int] = None, max_n: Optional[int] = None,
               jobs: int = 1, mutation_seed: Optional[int] = None) -> list[VerificationReport]:
    """Run the named checks (all by default), optionally in worker processes."""
    names = list(CHECKS) if not names else list(names)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    args = [(n, max_rank, max_n, mutation_seed) for n in names]
    if jobs <= 1:
        return [_run_one(*a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, *zip(*args)))
