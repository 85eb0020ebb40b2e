"""Prime ideals of Z[i]"""
import enum
import logging
import math
import threading
from dataclasses import dataclass

import numpy as np
from exceptions import InvalidArgument
from sympy.ntheory import sqrt_mod

from .integers import CanonicalGenerator


class PrimeKind(enum.IntEnum):
    """
    Splitting kind of a prime ideal; the integer value orders ideals of equal norm
    """

    RAMIFIED = 0
    SPLIT_PRIMARY = 1
    SPLIT_CONJUGATE = 2
    INERT = 3


@dataclass(frozen=True)
class PrimeIdeal:
    generator: CanonicalGenerator
    kind: PrimeKind
    norm: int
    rational_prime: int

    def __str__(self):
        return f"{self.generator}[{self.kind.name.lower()}, N={self.norm}]"

    @property
    def is_split(self):
        return self.kind in (PrimeKind.SPLIT_PRIMARY, PrimeKind.SPLIT_CONJUGATE)

    @property
    def log_norm(self):
        return math.log(self.norm)


def rational_primes(limit):
    """
    All rational primes <= limit, by a sieve of Eratosthenes
    """
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def smallest_prime_factors(limit):
    """
    spf[n] is the smallest prime dividing n (spf[0] = spf[1] = 0)
    """
    spf = np.zeros(limit + 1, dtype=np.int32)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            multiples = spf[p * p :: p]
            multiples[multiples == 0] = p
    unmarked = np.flatnonzero(spf == 0)
    spf[unmarked] = unmarked
    spf[:2] = 0
    return spf


def cornacchia(p, root):
    """
    Solve a^2 + b^2 = p from a square root of -1 modulo p; returns (a, b) with a > b > 0
    """
    if root < p // 2:
        root = p - root

    a, b = p, root
    limit = math.isqrt(p)
    while b > limit:
        a, b = b, a % b

    remainder = p - b * b
    other = math.isqrt(remainder)
    if other * other != remainder:
        raise InvalidArgument(f"{p} is not a sum of two squares")
    return max(b, other), min(b, other)


def two_squares(p):
    if p % 4 != 1:
        raise InvalidArgument(f"{p} is not congruent to 1 mod 4")
    return cornacchia(p, int(sqrt_mod(p - 1, p)))


class PrimeSieve:
    """
    All prime ideals of norm <= limit, sorted by norm then kind

    Alongside the prime ideals the sieve keeps the tables needed to factor any
    norm <= limit: the smallest prime factor of every integer, the sum of two
    squares decomposition of each split prime and the index of the first prime
    ideal above each rational prime.
    """

    def __init__(self, limit):
        if limit < 2:
            raise InvalidArgument(f"Sieve limit must be at least 2, got {limit}")

        self.limit = int(limit)
        logging.info(f"Sieving prime ideals up to norm {self.limit}...")

        primes = rational_primes(self.limit)
        self.spf = smallest_prime_factors(self.limit)

        # split primes: two prime ideals (a, b) and (b, a)
        split = primes[primes % 4 == 1]
        self.square_a = np.zeros(self.limit + 1, dtype=np.int32)
        self.square_b = np.zeros(self.limit + 1, dtype=np.int32)
        for p in split.tolist():
            self.square_a[p], self.square_b[p] = two_squares(p)

        # inert primes: one prime ideal of norm p^2
        inert = primes[(primes % 4 == 3) & (primes * primes <= self.limit)]

        norms = np.concatenate([[2], split, split, inert * inert]).astype(np.int64)
        rational = np.concatenate([[2], split, split, inert]).astype(np.int64)
        kinds = np.concatenate(
            [
                [PrimeKind.RAMIFIED],
                np.full(split.size, PrimeKind.SPLIT_PRIMARY),
                np.full(split.size, PrimeKind.SPLIT_CONJUGATE),
                np.full(inert.size, PrimeKind.INERT),
            ]
        ).astype(np.int8)
        re = np.concatenate([[1], self.square_a[split], self.square_b[split], inert]).astype(np.int64)
        im = np.concatenate([[1], self.square_b[split], self.square_a[split], np.zeros(inert.size)]).astype(np.int64)

        order = np.lexsort((kinds, norms))
        self.norms = norms[order]
        self.rational = rational[order]
        self.kinds = kinds[order]
        self.re = re[order]
        self.im = im[order]
        self.log_norms = np.log(self.norms.astype(np.float64))
        self.args = np.arctan2(self.im, self.re)

        # first prime ideal above each rational prime; split conjugates follow their primary
        self.base_index = np.full(self.limit + 1, -1, dtype=np.int64)
        first = self.kinds != PrimeKind.SPLIT_CONJUGATE
        self.base_index[self.rational[first]] = np.flatnonzero(first)

        self._ideals = None
        logging.info(
            f"Found {len(self)} prime ideals: 1 ramified, {2 * split.size} split, {inert.size} inert"
        )

    def __len__(self):
        return int(self.norms.size)

    def __getitem__(self, index):
        return self.ideals()[index]

    def __iter__(self):
        return iter(self.ideals())

    def ideals(self):
        if self._ideals is None:
            self._ideals = [
                PrimeIdeal(CanonicalGenerator(int(re), int(im)), PrimeKind(int(kind)), int(norm), int(p))
                for re, im, kind, norm, p in zip(
                    self.re.tolist(), self.im.tolist(), self.kinds.tolist(), self.norms.tolist(), self.rational.tolist()
                )
            ]
        return self._ideals

    def upto(self, x):
        """
        Number of prime ideals with norm <= x (a prefix of the sorted list)
        """
        return int(np.searchsorted(self.norms, math.floor(x), side="right"))

    def above(self, p):
        """
        The prime ideals dividing the rational prime p
        """
        index = int(self.base_index[p]) if p <= self.limit else -1
        if index < 0:
            return []
        if self.kinds[index] == PrimeKind.SPLIT_PRIMARY:
            return [self[index], self[index + 1]]
        return [self[index]]

    def census(self, limit=None):
        """
        Counts by splitting kind of the prime ideals with norm <= limit (all of them by default)
        """
        count = len(self) if limit is None else self.upto(limit)
        counts = np.bincount(self.kinds[:count], minlength=len(PrimeKind))
        return {kind.name.lower(): int(counts[kind]) for kind in PrimeKind}


def prime_ideal_sieve(limit):
    if limit < 2:
        raise InvalidArgument(f"Sieve limit must be at least 2, got {limit}")
    sieve = session_sieve(limit)
    return sieve.ideals()[: sieve.upto(limit)]


_SESSION = {"sieve": None}
_SESSION_LOCK = threading.Lock()


def session_sieve(limit):
    """
    Sieve shared within the process, rebuilt (doubling) only when a larger limit is needed
    """
    with _SESSION_LOCK:
        sieve = _SESSION["sieve"]
        if sieve is None or sieve.limit < limit:
            size = max(int(limit), 2 * sieve.limit if sieve else 1 << 12)
            sieve = PrimeSieve(size)
            _SESSION["sieve"] = sieve
        return sieve
