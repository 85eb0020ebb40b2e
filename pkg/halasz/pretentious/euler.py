"""Truncated Euler products of Dirichlet series over ideals"""
import logging
import math
from dataclasses import dataclass

import numpy as np
from exceptions import InvalidArgument, PrecisionError
from gaussian import session_sieve

# local factors are summed until the next term is below this
LOCAL_TOLERANCE = 1e-12

# complex entries per vectorized (s, prime) chunk
CHUNK_ENTRIES = 1 << 21

# constant in the prime ideal tail estimate sum_{N(p) > X} N(p)^{-sigma} <= C X^{1-sigma} / ((sigma-1) log X)
TAIL_CONSTANT = 2.0


@dataclass(frozen=True)
class EulerValue:
    value: complex
    tail_bound: float


class EulerProduct:
    """
    F_X(s) = prod_{N(p) <= X} sum_k f(p^k) N(p)^{-ks}, valid for Re(s) >= sigma_min

    Completely multiplicative functions use the closed form 1/(1 - f(p) N(p)^{-s});
    other functions carry as many prime powers per prime as the tolerance needs
    at sigma_min.
    """

    def __init__(self, f, X, sigma_min, kappa=1.0, sieve=None):
        X = math.floor(X)
        if X < 2:
            raise InvalidArgument(f"Euler product cutoff must be at least 2, got {X}")
        threshold = 1 + 1 / math.log(X)
        if sigma_min < threshold * (1 - 1e-12):
            raise PrecisionError(f"Re(s) = {sigma_min} is below 1 + 1/log X = {threshold:.12g} for X = {X}")

        self.f = f
        self.X = X
        self.sigma_min = float(sigma_min)
        self.kappa = kappa

        if sieve is None or sieve.limit < X:
            sieve = session_sieve(X)
        count = sieve.upto(X)
        primes = sieve.ideals()[:count]
        self.log_norms = sieve.log_norms[:count]

        if f.completely_multiplicative:
            self._groups = [(1, np.arange(count), np.array([[f.local(prime, 1) for prime in primes]]))]
        else:
            depth = np.ceil(-math.log(LOCAL_TOLERANCE) / (self.sigma_min * self.log_norms)).astype(np.int64)
            self._groups = []
            for k_max in np.unique(depth).tolist():
                index = np.flatnonzero(depth == k_max)
                coefficients = np.array(
                    [[f.local(primes[i], k) for i in index.tolist()] for k in range(1, k_max + 1)],
                    dtype=np.complex128,
                )
                self._groups.append((k_max, index, coefficients))

        logging.debug(f"Euler product of {f.label} over {count} prime ideals up to {X}")

    def tail_bound(self, sigma):
        return TAIL_CONSTANT * self.kappa * self.X ** (1 - sigma) / ((sigma - 1) * math.log(self.X))

    def _log_chunk(self, s):
        total = np.zeros(s.size, dtype=np.complex128)
        for k_max, index, coefficients in self._groups:
            z = np.exp(-s[:, None] * self.log_norms[index][None, :])
            if self.f.completely_multiplicative:
                total -= np.sum(np.log1p(-coefficients[0][None, :] * z), axis=1)
                continue
            acc = np.broadcast_to(coefficients[k_max - 1], z.shape).astype(np.complex128)
            for k in range(k_max - 2, -1, -1):
                acc = acc * z + coefficients[k]
            total += np.sum(np.log1p(z * acc), axis=1)
        return total

    def log(self, s):
        """
        log F_X(s) for an array of s
        """
        s = np.atleast_1d(np.asarray(s, dtype=np.complex128))
        if s.size and float(s.real.min()) < self.sigma_min * (1 - 1e-12):
            raise PrecisionError(f"Re(s) = {float(s.real.min())} is below the prepared sigma {self.sigma_min}")

        step = max(1, CHUNK_ENTRIES // max(1, self.log_norms.size))
        return np.concatenate([self._log_chunk(s[i : i + step]) for i in range(0, s.size, step)] or [s * 0])

    def __call__(self, s):
        scalar = np.ndim(s) == 0
        values = np.exp(self.log(s))
        sigma = float(np.min(np.real(s)))
        if scalar:
            return EulerValue(complex(values[0]), self.tail_bound(sigma))
        return EulerValue(values, self.tail_bound(sigma))


def euler_F(f, s, X, kappa=1.0, sieve=None):
    """
    F(s) by its Euler product over prime ideals of norm <= X, with a tail estimate for |log F - log F_X|
    """
    sigma = float(np.min(np.real(s)))
    return EulerProduct(f, X, sigma, kappa, sieve)(s)
