"""Descending decompositions, parabolic coset codes and semi-Whittaker supports in type A."""
from .cosets import (
    CosetCode,
    PositiveImageError,
    RlDecomposition,
    coset_count,
    coset_decode,
    coset_key,
    construct_w_mu,
    enumerate_coset_codes,
    cycle_rewrite,
    min_rep,
    rl_decomposition,
)
from .orbits import (
    OrbitCertificate,
    OrbitTorus,
    SupportReport,
    Verdict,
    attached_orbit_certificate,
    delta_lambda,
    semiwhittaker_verdict,
    support_sets,
    torus_exponents,
    u_level,
)
from .partitions import (
    Composition,
    Relation,
    SortedPartition,
    composition,
    dominance_compare,
    dominates,
    enumerate_compositions,
    enumerate_partitions,
    partial_sum_bound,
    partial_sum_violation,
    partition,
    transpose,
)
from .verify import VerificationReport, run_checks
from .weyl import (
    DescendingCode,
    Permutation,
    ReducedWord,
    Root,
    RootSet,
    act_on_root,
    cycle_action,
    decode,
    encode,
    enumerate_codes,
    negative_simple_set,
)

__version__ = "0.1.0"
