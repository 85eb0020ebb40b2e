"""Counting estimates for ideals and prime ideals"""
import math

import numpy as np
from exceptions import InvalidArgument, PreconditionError
from gaussian import count_ideals, session_sieve
from tools import BoundReport


def prime_power_counts(norms, limit):
    """
    Number of k >= 1 with norm^k <= limit, elementwise
    """
    counts = np.zeros(norms.size, dtype=np.int64)
    power = norms.copy()
    alive = power <= limit
    while alive.any():
        counts += alive
        power = np.where(alive, power * norms, power)
        alive &= power <= limit
    return counts


def _psi(limit):
    limit = math.floor(limit)
    if limit < 2:
        return 0.0
    sieve = session_sieve(limit)
    count = sieve.upto(limit)
    norms = sieve.norms[:count]
    return math.fsum((prime_power_counts(norms, limit) * sieve.log_norms[:count]).tolist())


def psi_ideal(x):
    """
    psi(x) = sum over N(a) <= x of Lambda(a)
    """
    if x < 2:
        raise InvalidArgument(f"x must be at least 2, got {x}")
    return _psi(x)


def mertens_ideal(x):
    """
    sum over N(p) <= x of 1/N(p), minus log log x
    """
    if x < 3:
        raise InvalidArgument(f"x must be at least 3, got {x}")
    sieve = session_sieve(math.floor(x))
    reciprocals = 1.0 / sieve.norms[: sieve.upto(x)]
    return math.fsum(reciprocals.tolist()) - math.log(math.log(x))


def psi_report(x):
    return BoundReport("psi_over_x", {"x": x}, psi_ideal(x), float(x))


def brun_titchmarsh_mod4(U, H):
    """
    Primes p = 1 (mod 4) in (U, U + H] against H / (2 log 2H)
    """
    if U < 3 or not 2 <= H <= U:
        raise PreconditionError(f"Need U >= 3 and 2 <= H <= U, got U={U}, H={H}")

    lo, hi = math.floor(U), math.floor(U + H)
    sieve = session_sieve(hi)
    n = np.arange(lo + 1, hi + 1, dtype=np.int64)
    count = int(np.count_nonzero((n % 4 == 1) & (sieve.spf[n] == n)))
    return BoundReport("brun_titchmarsh", {"U": U, "H": H}, float(count), H / (2 * math.log(2 * H)))


def short_interval_vm(M, T):
    """
    sum of Lambda(a) over M e^{-1/T} <= N(a) <= M e^{1/T}, against M/T
    """
    if T < 1 or M < T * T:
        raise PreconditionError(f"Need T >= 1 and M >= T^2, got M={M}, T={T}")

    lower, upper = M * math.exp(-1 / T), M * math.exp(1 / T)
    total = _psi(math.floor(upper)) - _psi(math.ceil(lower) - 1)
    return BoundReport("short_interval_vm", {"M": M, "T": T}, total, M / T, {"lower": lower, "upper": upper})


def lattice_count_deviation(x):
    """
    |#{N(a) <= x} - (pi/4) x| against 5 sqrt(x)
    """
    if x < 1:
        raise InvalidArgument(f"x must be at least 1, got {x}")
    count = count_ideals(x)
    return BoundReport("lattice_count", {"x": x}, abs(count - math.pi / 4 * x), 5 * math.sqrt(x), {"count": count})
