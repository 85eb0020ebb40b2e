"""Multiplicative functions on the ideals of Z[i]"""
import cmath
import math
import threading
import weakref

import numpy as np
from exceptions import InvalidArgument
from gaussian import factor_ideal
from scipy.special import binom

MASK64 = (1 << 64) - 1


class MultFn:
    """
    A multiplicative function given by its values on prime powers

    rule(prime, k) is asked for k >= 1 only; the unit ideal maps to 1. When the
    function is completely multiplicative the rule is only consulted at k = 1
    and higher powers are derived from it.
    """

    def __init__(self, rule, completely_multiplicative=False, label="f"):
        self._rule = rule
        self.completely_multiplicative = completely_multiplicative
        self.label = label

        self._local = {}
        self._lock = threading.Lock()
        self._tables = weakref.WeakKeyDictionary()

    def __repr__(self):
        return f"MultFn({self.label})"

    def __mul__(self, other):
        return ProductFn(self, other)

    def __call__(self, g, sieve=None):
        return evaluate(self, g, sieve)

    def local(self, prime, k):
        """
        f(p^k) for a prime ideal p
        """
        if k == 0:
            return 1 + 0j

        key = (prime.norm, int(prime.kind), k)
        value = self._local.get(key)
        if value is not None:
            return value

        if self.completely_multiplicative and k > 1:
            value = self.local(prime, 1) ** k
        else:
            value = complex(self._rule(prime, 1 if self.completely_multiplicative else k))

        with self._lock:
            self._local[key] = value
        return value

    def at(self, g, sieve=None):
        value = 1 + 0j
        for prime, k in factor_ideal(g, sieve):
            value *= self.local(prime, k)
        return value

    def values(self, block):
        """
        Values on every ideal of an IdealBlock / IdealTable, cached per block
        """
        cached = self._tables.get(block)
        if cached is None:
            cached = self.evaluate_block(block)
            cached.flags.writeable = False
            with self._lock:
                self._tables[block] = cached
        return cached

    def evaluate_block(self, block):
        return block.multiplicative_values(self.local)


class ProductFn(MultFn):
    """
    Pointwise product of multiplicative functions
    """

    def __init__(self, *factors):
        flat = []
        for factor in factors:
            flat.extend(factor.factors if isinstance(factor, ProductFn) else [factor])
        self.factors = tuple(flat)

        def rule(prime, k):
            return math.prod((factor.local(prime, k) for factor in self.factors), start=1 + 0j)

        super().__init__(
            rule,
            completely_multiplicative=all(factor.completely_multiplicative for factor in self.factors),
            label="*".join(factor.label for factor in self.factors),
        )

    def at(self, g, sieve=None):
        return math.prod((factor.at(g, sieve) for factor in self.factors), start=1 + 0j)

    def evaluate_block(self, block):
        values = np.ones(len(block), dtype=np.complex128)
        for factor in self.factors:
            values = values * factor.values(block)
        return values


class AngularCharacter(MultFn):
    """
    lambda_m(a) = exp(4 i m arg(a))
    """

    def __init__(self, m):
        self.m = int(m)
        super().__init__(lambda prime, _: cmath.exp(4j * self.m * prime.generator.arg), True, f"lambda_{self.m}")

    def at(self, g, sieve=None):
        return cmath.exp(4j * self.m * g.arg)

    def evaluate_block(self, block):
        return np.exp(4j * self.m * block.arg)


class NormPower(MultFn):
    """
    N(a)^{it}
    """

    def __init__(self, t):
        self.t = float(t)
        super().__init__(lambda prime, _: cmath.exp(1j * self.t * prime.log_norm), True, f"N^{self.t:g}i")

    def at(self, g, sieve=None):
        return cmath.exp(1j * self.t * math.log(g.norm))

    def evaluate_block(self, block):
        return np.exp(1j * self.t * np.log(block.norm.astype(np.float64)))


def evaluate(f, g, sieve=None):
    """
    f at the ideal generated by the canonical generator g
    """
    if g.norm == 1:
        return 1 + 0j
    return f.at(g, sieve)


def one():
    return MultFn(lambda prime, k: 1, completely_multiplicative=True, label="one")


def mobius():
    return MultFn(lambda prime, k: -1 if k == 1 else 0, label="mu")


def liouville():
    return MultFn(lambda prime, k: -1, completely_multiplicative=True, label="liouville")


def divisor_function(kappa):
    """
    d_kappa with d_kappa(p^k) = binom(kappa + k - 1, k)
    """
    if kappa < 1:
        raise InvalidArgument(f"kappa must be at least 1, got {kappa}")
    return MultFn(lambda prime, k: float(binom(kappa + k - 1, k)), label=f"d_{kappa:g}")


def splitmix64(state):
    state = (state + 0x9E3779B97F4A7C15) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def prime_hash(seed, norm, kind, k=1):
    """
    64-bit hash of (seed, norm, kind, k), chained through SplitMix64
    """
    state = splitmix64(seed & MASK64)
    state = splitmix64(state ^ (norm & MASK64))
    return splitmix64(state ^ ((int(kind) << 8) | k))


def random_multiplicative(seed, circle=False, completely_multiplicative=True):
    """
    Reproducible random multiplicative function

    f(p) is +1 or -1 by the top bit of the hash, or exp(2 pi i u) for the
    53-bit fraction u when circle is set. Without complete multiplicativity each
    prime power draws its own value.
    """

    def rule(prime, k):
        h = prime_hash(seed, prime.norm, prime.kind, k)
        if circle:
            return cmath.exp(2j * math.pi * (h >> 11) / (1 << 53))
        return -1 if h >> 63 else 1

    kind = "circle" if circle else "pm1"
    return MultFn(rule, completely_multiplicative=completely_multiplicative, label=f"random_{kind}_{seed}")


BUILTINS = {
    "one": one,
    "mu": mobius,
    "liouville": liouville,
    "d2": lambda: divisor_function(2),
}


def builtin(name, seed=0):
    """
    Look up a named function as used on the command line
    """
    if name == "random":
        return random_multiplicative(seed)
    if name == "random-circle":
        return random_multiplicative(seed, circle=True)
    if name not in BUILTINS:
        raise InvalidArgument(
            f"Unknown function {name}, expected one of {sorted([*BUILTINS, 'random', 'random-circle'])}"
        )
    return BUILTINS[name]()
