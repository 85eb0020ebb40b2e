"""Gaussian integers"""
from .ideals import (
    DEFAULT_MAX_IDEALS,
    IdealBlock,
    IdealFactorization,
    IdealTable,
    count_ideals,
    enumerate_ideals,
    factor_arrays,
    factor_ideal,
    ideal_blocks,
    iter_blocks,
    norm_window,
    reconstruct,
    session_table,
    wedge_count,
)
from .integers import (
    HALF_PI,
    UNIT_IDEAL,
    CanonicalGenerator,
    GaussInt,
    canonicalize,
    circle_distance,
    conjugate_ideal,
    divides,
    ideal_arg,
    multiply,
)
from .primes import PrimeIdeal, PrimeKind, PrimeSieve, prime_ideal_sieve, rational_primes, session_sieve
