"""Angular modes of a multiplicative function pushed down to the integers"""
import logging
import math
from dataclasses import dataclass
from typing import Dict

import numpy as np
from exceptions import ContractViolation, InvalidArgument
from gaussian import DEFAULT_MAX_IDEALS, PrimeKind, rational_primes, session_sieve
from multfun import AngularCharacter, NormPower, fsum_complex, norm_compress, table_for

# relative agreement required between ideal and compressed long sums
AGREEMENT_TOLERANCE = 1e-9


def twist(f, m):
    return f if m == 0 else f * AngularCharacter(m)


def compress_mode(f, m, X_plus_h, max_ideals=DEFAULT_MAX_IDEALS):
    """
    g_m(n) = sum over N(a) = n of f(a) lambda_m(a)
    """
    return norm_compress(twist(f, m), X_plus_h, max_ideals=max_ideals)


def h_factor(g, X):
    """
    (prod_{p <= X} (1 + (|g(p)| - 1)^2 / p), prod_{p <= X} (1 + (|g(p)| - 1) / p))
    """
    X = math.floor(X)
    if X > g.limit:
        raise InvalidArgument(f"Compressed values reach {g.limit}, need primes up to {X}")

    primes = rational_primes(X)
    excess = np.abs(g.values[primes]) - 1
    first = math.fsum(np.log1p(excess * excess / primes).tolist())
    second = math.fsum(np.log1p(excess / primes).tolist())
    return math.exp(first), math.exp(second)


@dataclass(frozen=True)
class H1Result:
    m: int
    lhs: float
    rhs_sum: float
    best_A: float
    slack: float


def h1_check(f, m, z, w):
    """
    Paired values over split prime ideals z < N(p) <= w

    lhs sums |f(p) lambda_m(p) + f(conj p) lambda_m(conj p)| / N(p) over every split
    prime ideal, rhs_sum sums 1/N(p) over the same ideals; best_A is their ratio
    and slack the 1/log z allowance.
    """
    if not 2 <= z <= w:
        raise InvalidArgument(f"Need 2 <= z <= w, got z={z}, w={w}")

    sieve = session_sieve(max(math.floor(w), 2))
    lo, hi = sieve.upto(z), sieve.upto(w)
    primary = lo + np.flatnonzero(sieve.kinds[lo:hi] == PrimeKind.SPLIT_PRIMARY)
    if not primary.size:
        return H1Result(m, 0.0, 0.0, math.nan, 1 / math.log(z))

    ideals = sieve.ideals()
    mode = twist(f, m)
    pairs = np.array(
        [mode.local(ideals[i], 1) + mode.local(ideals[i + 1], 1) for i in primary.tolist()], dtype=np.complex128
    )
    weights = 1.0 / sieve.norms[primary]

    # each pair is counted once for each of its two prime ideals
    lhs = 2 * math.fsum((np.abs(pairs) * weights).tolist())
    rhs_sum = 2 * math.fsum(weights.tolist())
    return H1Result(m, lhs, rhs_sum, lhs / rhs_sum, 1 / math.log(z))


@dataclass(frozen=True)
class H1Coverage:
    results: Dict[int, H1Result]

    @property
    def window(self):
        return min(self.results), max(self.results)

    @property
    def weakest(self):
        return min(self.results.values(), key=lambda result: (result.best_A, abs(result.m)))


def h1_coverage(f, ms, z, w):
    """
    h1_check over a window of modes; only the modes listed are claimed
    """
    results = {m: h1_check(f, m, z, w) for m in ms}
    if not results:
        raise InvalidArgument("Empty window of modes")
    coverage = H1Coverage(results)
    logging.info(
        f"(H1) for {f.label} on m in [{coverage.window[0]}, {coverage.window[1]}]: "
        f"weakest A = {coverage.weakest.best_A:.4g} at m = {coverage.weakest.m}"
    )
    return coverage


def twisted_long_sum(f, m, t0, Z, compressed=None, table=None):
    """
    sum over N(a) <= Z of f(a) lambda_m(a) N(a)^{-i t0}

    When the compressed mode g_m is given, the same sum is taken over the
    integers and both must agree.
    """
    if Z < 1:
        raise InvalidArgument(f"Z must be at least 1, got {Z}")

    table = table_for(Z, table)
    count = table.upto(Z)
    terms = twist(f, m).values(table)[:count]
    if t0:
        terms = terms * NormPower(-t0).values(table)[:count]
    total = fsum_complex(terms)

    if compressed is not None:
        other = compressed.dirichlet_sum(Z, t0)
        scale = max(1.0, math.fsum(np.abs(terms).tolist()))
        if abs(other - total) > AGREEMENT_TOLERANCE * scale:
            raise ContractViolation(f"Compressed long sum {other} disagrees with the ideal sum {total}")
    return total
