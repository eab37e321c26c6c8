"""
Acceptance gate: each criterion runs at its stated bound and wall-clock
limit. One PASS/FAIL line per criterion is printed in the terminal summary.
"""
import gc
import math
import os
import time

import pytest

import conftest
from weylcode.cosets import coset_decode, construct_w_mu, enumerate_coset_codes
from weylcode.orbits import torus_exponents
from weylcode.partitions import composition, partition
from weylcode.verify import (
    CHECKS,
    run_checks,
    verify_coset_representatives,
    verify_cycle_rewrite,
    verify_partial_sum_bound,
    verify_orbit_certificates,
    verify_pi_bijection,
    verify_root_action,
    verify_supports,
    verify_torus,
)
from weylcode.weyl import DescendingCode, decode

from oracles import bfs_lengths, parabolic_cosets


def _gate(num, what, limit, body, repeat=1):
    """Run body() -> (ok, detail); record and assert both correctness and time.
    With repeat > 1 the best time is kept, as timeit does."""
    secs = math.inf
    for _ in range(repeat):
        start = time.perf_counter()
        ok, detail = body()
        secs = min(secs, time.perf_counter() - start)
        if not ok:
            break
    passed = bool(ok) and secs < limit
    conftest.ACCEPTANCE[num] = (passed, what, secs, limit)
    assert ok, detail
    assert secs < limit, f"took {secs:.3f} s, limit {limit} s"


def _failures(report, *whats):
    return [f for f in report.failures if not whats or f["what"] in whats]


RANK_TWO = {
    (2, 3): (),
    (2, 2): (2,),
    (2, 1): (2, 1),
    (1, 3): (1,),
    (1, 2): (1, 2),
    (1, 1): (1, 2, 1),
}


def test_criterion_01_rank_two_table():
    codes = [DescendingCode(2, c) for c in RANK_TWO]

    def body():
        words = [decode(c)[0].letters for c in codes]
        return words == list(RANK_TWO.values()), words

    gc.disable()
    try:
        _gate(1, "six rank-2 codes decode to the listed words", 0.001, body, repeat=5)
    finally:
        gc.enable()


def test_criterion_02_descending_bijection():
    def body():
        r = verify_pi_bijection(max_rank=6)
        counts = r.scope["per_rank"]
        ok = r.passed and all(counts[k] == math.factorial(k + 1) for k in range(1, 7))
        return ok, r.failures[:3]

    _gate(2, "descending codes biject onto S_{r+1}, reduced, encode inverts decode, r <= 6", 5, body)


FIVE_REPS = [(), (3,), (3, 4), (3, 2), (3, 2, 4), (3, 2, 4, 3), (3, 2, 1), (3, 2, 1, 4),
             (3, 2, 1, 4, 3), (3, 2, 1, 4, 3, 2)]


def test_criterion_03_two_block_example():
    def body():
        codes = enumerate_coset_codes(composition("3,2"))
        if sorted(c.word().letters for c in codes) != sorted(FIVE_REPS):
            return False, [c.render() for c in codes]
        lengths = bfs_lengths(5)
        reps = {coset_decode(c).images for c in codes}
        for coset in parabolic_cosets((3, 2)):
            hit = reps & coset
            if len(hit) != 1:
                return False, f"coset hit {len(hit)} times"
            (rep,) = hit
            if any(lengths[v] <= lengths[rep] for v in coset if v != rep):
                return False, f"{rep} not strictly shortest"
        return True, None

    _gate(3, "parabolic (3,2) gives the ten listed minimal representatives", 1, body)


def test_criterion_04_coset_sweep():
    def body():
        r = verify_coset_representatives(max_n=7)
        return r.passed, r.failures[:3]

    _gate(4, "coset codes: count, one per coset, strictly minimal, n <= 7", 60, body)


def test_criterion_05_rewrite_identity():
    def body():
        r = verify_cycle_rewrite(max_rank=10)
        return r.passed and r.cases > 0, r.failures[:3]

    _gate(5, "cycle rewrite identity, both forms, r <= 10", 1, body)


def test_criterion_06_partial_sum_bound():
    def body():
        r = verify_partial_sum_bound(max_n=12)
        return r.passed, r.failures[:3]

    _gate(6, "partial-sum bound and its equality case, n <= 12", 30, body)


def test_criterion_07_root_action():
    def body():
        r = verify_root_action(max_rank=6, closed_form_rank=8)
        return r.passed, r.failures[:3]

    _gate(7, "cycle-product root action sweeps r <= 6, closed form r <= 8", 60, body)


def test_criterion_08_violation_kills_support():
    def body():
        r = verify_supports(max_n=8)
        bad = _failures(r, "representative survives despite a violation",
                        "negative image not reached through simple roots",
                        "R_l ordering fails on consecutive simple roots")
        return not bad and r.cases > 0, bad[:3]

    _gate(8, "partial-sum violation forces empty support, n <= 8", 300, body)


def test_criterion_09_unique_w_mu():
    target = "s321 s43 s5 | s654321 s7654 s87 | s987654321"

    def body():
        r = verify_supports(max_n=8)
        bad = _failures(r, "support at lambda = mu is not {w_mu}")
        rendered = construct_w_mu(partition("4,3,3")).render()
        return not bad and rendered == target, (bad[:3], rendered)

    _gate(9, "support at lambda = mu is exactly {w_mu}, n <= 8; (4,3,3) word matches", 300, body)


def test_criterion_10_torus():
    def body():
        h = torus_exponents(partition("3,3,1")).exponents
        r = verify_torus(max_n=10)
        return h == (2, 2, 0, 0, 0, -2, -2) and r.passed, (h, r.failures[:3])

    _gate(10, "h_(3,3,1) exact; exponent sums and U-level nesting, n <= 10", 5, body)


def test_criterion_11_orbit_certificates():
    def body():
        r = verify_orbit_certificates(max_n=8)
        return r.passed, r.failures[:3]

    _gate(11, "vanishing iff orbit not below mu, mu-row nonvanishing, n <= 8", 300, body)


def test_criterion_12_mutations_are_caught():
    jobs = min(len(CHECKS), os.cpu_count() or 1)

    def body():
        reports = run_checks(mutation_seed=12, jobs=jobs)
        silent = [r.check for r in reports if r.passed]
        return not silent and len(reports) == len(CHECKS), silent

    _gate(12, "every check reports a counterexample under a seeded mutation", 600, body)
