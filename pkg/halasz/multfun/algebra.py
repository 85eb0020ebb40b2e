"""Dirichlet convolution and structural decompositions"""
import functools
import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from exceptions import InvalidArgument
from gaussian import CanonicalGenerator, PrimeIdeal, session_sieve, session_table

from .function import MultFn, divisor_function

# relative slack when comparing |Lambda_f| with kappa log N
LAMBDA_TOLERANCE = 1e-12


def convolve(f, g):
    """
    Dirichlet convolution f * g, built prime power by prime power
    """

    def rule(prime, k):
        return sum(f.local(prime, j) * g.local(prime, k - j) for j in range(k + 1))

    return MultFn(rule, label=f"({f.label}*{g.label})")


def lambda_f(f, prime, k_max):
    """
    Lambda_f(p^k) for k = 1..k_max, the coefficients of -F'/F at the prime p

    Solves m f(p^m) log N(p) = sum_{j=1..m} f(p^{m-j}) Lambda_f(p^j) forward in m.
    """
    if k_max < 1:
        raise InvalidArgument(f"k_max must be at least 1, got {k_max}")

    log_norm = prime.log_norm
    coefficients = []
    for m in range(1, k_max + 1):
        value = m * f.local(prime, m) * log_norm
        value -= sum(f.local(prime, m - j) * coefficients[j - 1] for j in range(1, m))
        coefficients.append(value)
    return coefficients


@dataclass(frozen=True)
class LambdaCheck:
    ok: bool
    prime: Optional[PrimeIdeal] = None
    k: int = 0
    value: complex = 0j
    bound: float = 0.0

    def __bool__(self):
        return self.ok


def max_exponent(norm, limit):
    """
    Largest k with norm^k <= limit
    """
    k, power = 0, norm
    while power <= limit:
        k += 1
        power *= norm
    return k


def check_lambda_bound(f, kappa, X, sieve=None):
    """
    Whether |Lambda_f(p^k)| <= kappa log N(p) for every prime power of norm <= X

    Returns the first violation in norm order otherwise.
    """
    X = math.floor(X)
    if X < 2:
        raise InvalidArgument(f"X must be at least 2, got {X}")
    if sieve is None or sieve.limit < X:
        sieve = session_sieve(X)

    for prime in sieve.ideals()[: sieve.upto(X)]:
        bound = kappa * prime.log_norm
        for k, value in enumerate(lambda_f(f, prime, max_exponent(prime.norm, X)), start=1):
            if abs(value) > bound * (1 + LAMBDA_TOLERANCE):
                logging.debug(f"Lambda bound fails for {f.label} at {prime}^{k}: {abs(value)} > {bound}")
                return LambdaCheck(False, prime, k, value, bound)
    return LambdaCheck(True)


@functools.lru_cache(maxsize=16)
def _divisor_function(kappa):
    return divisor_function(kappa)


def d_kappa(kappa, g):
    """
    Generalized divisor function d_kappa at the ideal generated by g
    """
    return _divisor_function(float(kappa))(g).real


def smooth_rough_split(f, y):
    """
    (s, l) with s the y-friable part of f and l the y-rough part, so f = s * l
    """
    if y < 2:
        raise InvalidArgument(f"y must be at least 2, got {y}")

    smooth = MultFn(lambda prime, k: f.local(prime, k) if prime.norm <= y else 0, label=f"{f.label}_le{y:g}")
    rough = MultFn(lambda prime, k: f.local(prime, k) if prime.norm > y else 0, label=f"{f.label}_gt{y:g}")
    return smooth, rough


def gh_decompose(f):
    """
    f = g * h with g completely multiplicative, g(p) = f(p), and h vanishing on primes
    """
    g = MultFn(lambda prime, _: f.local(prime, 1), completely_multiplicative=True, label=f"{f.label}_g")
    h = MultFn(
        lambda prime, k: 0 if k == 1 else f.local(prime, k) - f.local(prime, 1) * f.local(prime, k - 1),
        label=f"{f.label}_h",
    )
    return g, h


def h_tail(h, z, X, table=None):
    """
    sum over z < N(d) <= X of |h(d)| / N(d)
    """
    if z < 1:
        raise InvalidArgument(f"z must be at least 1, got {z}")
    if table is None or table.limit < math.floor(X):
        table = session_table(X)

    window = table.window(z, X)
    terms = np.abs(h.values(table)[window]) / table.norm[window]
    return math.fsum(terms.tolist())


def canonical_arrays(re, im):
    """
    Vectorized canonicalize: rotate each nonzero element into re >= 1, im >= 0
    """
    re, im = np.asarray(re, dtype=np.int64), np.asarray(im, dtype=np.int64)
    out_re, out_im = re.copy(), im.copy()

    second = (re <= 0) & (im > 0)
    out_re[second], out_im[second] = im[second], -re[second]
    third = (re < 0) & (im <= 0)
    out_re[third], out_im[third] = -re[third], -im[third]
    fourth = (re >= 0) & (im < 0)
    out_re[fourth], out_im[fourth] = -im[fourth], re[fourth]
    return out_re, out_im


def divisor_sum_identity(f, g, X, table=None):
    """
    Compare f * g with the direct sum over all factorizations a = d e, for N(a) <= X

    Returns the largest deviation and the ideal where it occurs.
    """
    X = math.floor(X)
    if table is None or table.limit < X:
        table = session_table(X)

    size = table.upto(X)
    f_values, g_values = f.values(table)[:size], g.values(table)[:size]
    stride = math.isqrt(X) + 1
    keys = table.re[:size] * stride + table.im[:size]
    order = np.argsort(keys)

    direct = np.zeros(size, dtype=np.complex128)
    for d in range(size):
        count = table.upto(X // int(table.norm[d]))
        d_re, d_im = table.re[d], table.im[d]
        e_re, e_im = table.re[:count], table.im[:count]
        re, im = canonical_arrays(d_re * e_re - d_im * e_im, d_re * e_im + d_im * e_re)
        position = order[np.searchsorted(keys, re * stride + im, sorter=order)]
        np.add.at(direct, position, f_values[d] * g_values[:count])

    deviation = np.abs(convolve(f, g).values(table)[:size] - direct)
    worst = int(np.argmax(deviation))
    return float(deviation[worst]), CanonicalGenerator(int(table.re[worst]), int(table.im[worst]))
