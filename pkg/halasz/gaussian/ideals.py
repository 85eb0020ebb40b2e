"""Ideal enumeration, factorization and angular counting"""
import logging
import math
import threading
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from exceptions import InvalidArgument, ResourceLimit

from .integers import HALF_PI, UNIT_IDEAL, CanonicalGenerator, canonicalize, multiply
from .primes import PrimeIdeal, session_sieve

# norms per enumeration block; about 0.8 million ideals
BLOCK_NORMS = 1 << 20

# upper bound on materialized ideals (re, im, norm, arg and factor rows)
DEFAULT_MAX_IDEALS = 40_000_000

# exponents are packed next to the prime index as prime * KEY_STRIDE + exponent
KEY_STRIDE = 64


def isqrt_array(values):
    """
    Vectorized floor(sqrt(n)) for non-negative int64 values
    """
    values = np.asarray(values, dtype=np.int64)
    roots = np.floor(np.sqrt(values.astype(np.float64))).astype(np.int64)
    roots -= (roots * roots > values).astype(np.int64)
    roots += ((roots + 1) * (roots + 1) <= values).astype(np.int64)
    return roots


def count_ideals(x):
    """
    Number of canonical generators with norm <= x (lattice points in the quarter disk)
    """
    limit = math.floor(x)
    if limit < 1:
        return 0
    res = np.arange(1, math.isqrt(limit) + 1, dtype=np.int64)
    return int(np.sum(isqrt_array(limit - res * res) + 1))


def norm_window(lo, hi):
    """
    All canonical generators with lo < norm <= hi as (norm, re, im) arrays

    Sorted by norm, ties by increasing argument.
    """
    lo, hi = int(lo), int(hi)
    if hi <= lo or hi < 1:
        empty = np.array([], dtype=np.int64)
        return empty, empty, empty

    res = np.arange(1, math.isqrt(hi) + 1, dtype=np.int64)
    squares = res * res
    im_hi = isqrt_array(hi - squares)
    below = lo - squares
    im_lo = np.where(below < 0, 0, isqrt_array(np.maximum(below, 0)) + 1)
    counts = np.maximum(im_hi - im_lo + 1, 0)

    re = np.repeat(res, counts)
    starts = np.cumsum(counts) - counts
    im = np.repeat(im_lo, counts) + (np.arange(re.size, dtype=np.int64) - np.repeat(starts, counts))
    norm = re * re + im * im

    order = np.lexsort((im, norm))
    return norm[order], re[order], im[order]


def ideal_blocks(limit, start=0, block=BLOCK_NORMS):
    """
    Stream the ideals with start < norm <= limit in norm-ordered blocks
    """
    lo = int(start)
    limit = math.floor(limit)
    while lo < limit:
        hi = min(lo + block, limit)
        yield norm_window(lo, hi)
        lo = hi


def enumerate_ideals(limit):
    """
    Yield each canonical generator with norm <= limit once, in nondecreasing norm order
    """
    for _, re, im in ideal_blocks(limit):
        for a, b in zip(re.tolist(), im.tolist()):
            yield CanonicalGenerator(a, b)


@dataclass(frozen=True)
class IdealFactorization:
    factors: Tuple[Tuple[PrimeIdeal, int], ...]

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    @property
    def norm(self):
        return math.prod(prime.norm**exponent for prime, exponent in self.factors)


def factor_arrays(re, im, norm, sieve):
    """
    Factor many ideals at once

    Returns flat rows (ideal position, prime ideal index, exponent) sorted by
    position then prime index. The split conjugate dividing an ideal is decided
    by exact divisibility of its generator by (a + bi).
    """
    z_re = np.array(re, dtype=np.int64)
    z_im = np.array(im, dtype=np.int64)
    rem = np.array(norm, dtype=np.int64)

    if rem.size and int(rem.max()) > sieve.limit:
        raise InvalidArgument(f"Norm {int(rem.max())} exceeds sieve limit {sieve.limit}")

    rows = []
    active = np.flatnonzero(rem > 1)
    while active.size:
        n = rem[active]
        p = sieve.spf[n].astype(np.int64)

        # v = exponent of p in the norm
        v = np.zeros(active.size, dtype=np.int64)
        divisible = n % p == 0
        while divisible.any():
            n = np.where(divisible, n // p, n)
            v += divisible
            divisible = n % p == 0
        rem[active] = n

        x, y = z_re[active], z_im[active]
        base = sieve.base_index[p]

        ramified = p == 2
        if ramified.any():
            xr, yr, vr = x[ramified], y[ramified], v[ramified]
            for step in range(int(vr.max())):
                go = vr > step
                # z / (1+i) = z (1-i) / 2
                xr, yr = np.where(go, (xr + yr) // 2, xr), np.where(go, (yr - xr) // 2, yr)
            x[ramified], y[ramified] = xr, yr
            rows.append((active[ramified], base[ramified], vr))

        inert = p % 4 == 3
        if inert.any():
            k = v[inert] // 2
            scale = p[inert] ** k
            x[inert] //= scale
            y[inert] //= scale
            rows.append((active[inert], base[inert], k))

        split = p % 4 == 1
        if split.any():
            xs, ys, vs, ps = x[split], y[split], v[split], p[split]
            a = sieve.square_a[ps].astype(np.int64)
            b = sieve.square_b[ps].astype(np.int64)

            k1 = np.zeros(vs.size, dtype=np.int64)
            for _ in range(int(vs.max())):
                # z / (a+bi) = z (a-bi) / p
                qr, qi = xs * a + ys * b, ys * a - xs * b
                go = (k1 < vs) & (qr % ps == 0) & (qi % ps == 0)
                xs, ys = np.where(go, qr // ps, xs), np.where(go, qi // ps, ys)
                k1 += go

            k2 = vs - k1
            for step in range(int(k2.max())):
                go = k2 > step
                # z / (a-bi) = z (a+bi) / p
                qr, qi = xs * a - ys * b, ys * a + xs * b
                xs, ys = np.where(go, qr // ps, xs), np.where(go, qi // ps, ys)

            x[split], y[split] = xs, ys
            owners, primary = active[split], base[split]
            rows.append((owners[k1 > 0], primary[k1 > 0], k1[k1 > 0]))
            rows.append((owners[k2 > 0], primary[k2 > 0] + 1, k2[k2 > 0]))

        z_re[active], z_im[active] = x, y
        active = active[rem[active] > 1]

    if not rows:
        empty = np.array([], dtype=np.int64)
        return empty, empty, empty

    owner = np.concatenate([row[0] for row in rows])
    prime = np.concatenate([row[1] for row in rows])
    exponent = np.concatenate([row[2] for row in rows])
    order = np.lexsort((prime, owner))
    return owner[order], prime[order], exponent[order]


def factor_ideal(g, sieve=None):
    """
    Unique factorization of the ideal generated by g into prime ideals
    """
    if g.norm == 1:
        return IdealFactorization(())
    if sieve is None or sieve.limit < g.norm:
        sieve = session_sieve(g.norm)

    _, prime, exponent = factor_arrays([g.re], [g.im], [g.norm], sieve)
    ideals = sieve.ideals()
    return IdealFactorization(tuple((ideals[int(i)], int(k)) for i, k in zip(prime, exponent)))


class IdealBlock:
    """
    A norm-ordered run of ideals with their factorization rows

    Multiplicative functions evaluate on a block at once; the full table and the
    streamed blocks of a long enumeration share this interface.
    """

    def __init__(self, norm, re, im, sieve):
        self.norm = np.asarray(norm, dtype=np.int64)
        self.re = np.asarray(re, dtype=np.int64)
        self.im = np.asarray(im, dtype=np.int64)
        self.arg = np.arctan2(self.im, self.re)
        self.sieve = sieve
        self.factor_owner, self.factor_prime, self.factor_exp = factor_arrays(self.re, self.im, self.norm, sieve)
        self._local_keys = None

    def __len__(self):
        return int(self.norm.size)

    def generator(self, index):
        return CanonicalGenerator(int(self.re[index]), int(self.im[index]))

    def index(self, g):
        """
        Position of the generator g in the block
        """
        lo = int(np.searchsorted(self.norm, g.norm, side="left"))
        hi = int(np.searchsorted(self.norm, g.norm, side="right"))
        matches = np.flatnonzero((self.re[lo:hi] == g.re) & (self.im[lo:hi] == g.im))
        if not matches.size:
            raise InvalidArgument(f"{g} is not in this range of ideals")
        return lo + int(matches[0])

    def upto(self, x):
        """
        Number of ideals with norm <= x
        """
        return int(np.searchsorted(self.norm, math.floor(x), side="right"))

    def window(self, x, y):
        """
        Slice of the ideals with x < norm <= y
        """
        return slice(self.upto(x), self.upto(y))

    def local_keys(self):
        if self._local_keys is None:
            keys = self.factor_prime * KEY_STRIDE + self.factor_exp
            self._local_keys = np.unique(keys, return_inverse=True)
        return self._local_keys

    def multiplicative_values(self, local):
        """
        Values of the multiplicative function with prime power rule local(prime, k)
        """
        unique, inverse = self.local_keys()
        ideals = self.sieve.ideals()
        factors = np.array(
            [local(ideals[key // KEY_STRIDE], key % KEY_STRIDE) for key in unique.tolist()], dtype=np.complex128
        )
        values = np.ones(len(self), dtype=np.complex128)
        np.multiply.at(values, self.factor_owner, factors[np.ravel(inverse)])
        return values

    def von_mangoldt(self):
        """
        Lambda(a) = log N(p) when a = p^k, else 0
        """
        count = np.bincount(self.factor_owner, minlength=len(self))
        single = count[self.factor_owner] == 1
        values = np.zeros(len(self), dtype=np.float64)
        values[self.factor_owner[single]] = self.sieve.log_norms[self.factor_prime[single]]
        return values

    def factorization(self, index):
        lo = int(np.searchsorted(self.factor_owner, index, side="left"))
        hi = int(np.searchsorted(self.factor_owner, index, side="right"))
        ideals = self.sieve.ideals()
        return IdealFactorization(
            tuple((ideals[int(i)], int(k)) for i, k in zip(self.factor_prime[lo:hi], self.factor_exp[lo:hi]))
        )


def iter_blocks(limit, start=0, sieve=None, block=BLOCK_NORMS):
    """
    Stream factored IdealBlocks covering start < norm <= limit
    """
    limit = math.floor(limit)
    if sieve is None or sieve.limit < limit:
        sieve = session_sieve(max(limit, 2))
    for norm, re, im in ideal_blocks(limit, start=start, block=block):
        yield IdealBlock(norm, re, im, sieve)


class IdealTable(IdealBlock):
    """
    All ideals with norm <= limit, materialized in norm order

    Holds the generator coordinates, norms and arguments as arrays together with
    the flat factorization rows, so multiplicative functions can be evaluated on
    every ideal at once.
    """

    def __init__(self, limit, sieve=None, max_ideals=DEFAULT_MAX_IDEALS):
        limit = math.floor(limit)
        if limit < 1:
            raise InvalidArgument(f"Ideal table limit must be at least 1, got {limit}")

        expected = count_ideals(limit)
        if expected > max_ideals:
            raise ResourceLimit(f"{expected} ideals up to norm {limit} exceed the budget of {max_ideals}")

        self.limit = limit
        if sieve is None or sieve.limit < limit:
            sieve = session_sieve(max(limit, 2))

        blocks = list(ideal_blocks(limit))
        super().__init__(
            np.concatenate([block[0] for block in blocks]),
            np.concatenate([block[1] for block in blocks]),
            np.concatenate([block[2] for block in blocks]),
            sieve,
        )
        logging.info(f"Built ideal table with {len(self)} ideals up to norm {limit}")


_TABLES = {"table": None}
_TABLES_LOCK = threading.Lock()


def session_table(limit, max_ideals=DEFAULT_MAX_IDEALS):
    """
    Ideal table shared within the process; any table reaching limit is reused
    """
    limit = max(math.floor(limit), 1)
    with _TABLES_LOCK:
        table = _TABLES["table"]
        if table is None or table.limit < limit:
            table = IdealTable(limit, max_ideals=max_ideals)
            _TABLES["table"] = table
        return table


def wedge_count(theta, delta, lower, upper):
    """
    Canonical generators with lower < norm <= upper and argument within delta of theta modulo pi/2
    """
    if not 0 <= theta < HALF_PI:
        raise InvalidArgument(f"theta must lie in [0, pi/2), got {theta}")

    total = 0
    for _, re, im in ideal_blocks(upper, start=math.floor(lower)):
        diff = np.mod(np.arctan2(im, re) - theta, HALF_PI)
        total += int(np.count_nonzero(np.minimum(diff, HALF_PI - diff) <= delta))
    return total


def reconstruct(factorization):
    """
    Canonical generator of the product of the factors
    """
    product = UNIT_IDEAL.as_gauss()
    for prime, exponent in factorization:
        for _ in range(exponent):
            product = multiply(product, prime.generator)
    return canonicalize(product)

