"""Norm-compression of ideal functions to functions on the integers"""
import logging
import math
from dataclasses import dataclass, field

import numpy as np
from exceptions import InvalidArgument, ResourceLimit
from gaussian import DEFAULT_MAX_IDEALS, iter_blocks, session_sieve

from .sums import fsum_complex


@dataclass
class CompressedFn:
    """
    values[n] = sum of f over the ideals of norm n, for n = 0..limit (values[0] = 0)
    """

    values: np.ndarray
    source_label: str
    _cumulative: np.ndarray = field(default=None, repr=False)

    def __len__(self):
        return int(self.values.size)

    def __getitem__(self, n):
        return complex(self.values[n])

    @property
    def limit(self):
        return len(self) - 1

    def cumulative(self):
        """
        P[n] = sum of values[1..n]
        """
        if self._cumulative is None:
            self._cumulative = np.cumsum(self.values)
        return self._cumulative

    def partial_sum(self, x):
        x = math.floor(x)
        if x > self.limit:
            raise InvalidArgument(f"{x} exceeds the compressed range {self.limit}")
        return fsum_complex(self.values[1 : x + 1])

    def window_sum(self, x, h):
        """
        sum over x < n <= x + h
        """
        lo, hi = math.floor(x), math.floor(x + h)
        if hi > self.limit:
            raise InvalidArgument(f"{hi} exceeds the compressed range {self.limit}")
        return fsum_complex(self.values[lo + 1 : hi + 1])

    def dirichlet_sum(self, Z, t0=0.0):
        """
        sum over n <= Z of values[n] n^{-i t0}
        """
        Z = math.floor(Z)
        n = np.arange(1, Z + 1, dtype=np.float64)
        return fsum_complex(self.values[1 : Z + 1] * np.exp(-1j * t0 * np.log(n)))


def norm_compress(f, X, sector=None, max_ideals=DEFAULT_MAX_IDEALS):
    """
    CompressedFn of f up to X in one streamed pass over the ideals

    With a sector only ideals whose argument lies in it contribute.
    """
    X = math.floor(X)
    if X < 1:
        raise InvalidArgument(f"X must be at least 1, got {X}")
    if X + 1 > max_ideals:
        raise ResourceLimit(f"Compressing to {X} norms exceeds the budget of {max_ideals} values")

    values = np.zeros(X + 1, dtype=np.complex128)
    for block in iter_blocks(X, sieve=session_sieve(max(X, 2))):
        if not len(block):
            continue
        block_values = f.evaluate_block(block)
        norm = block.norm
        if sector is not None and not sector.is_full:
            inside = sector.contains(block.arg)
            block_values, norm = block_values[inside], norm[inside]
            if not norm.size:
                continue

        base = int(norm[0])
        offsets = norm - base
        real = np.bincount(offsets, weights=block_values.real)
        imag = np.bincount(offsets, weights=block_values.imag)
        values[base : base + real.size] += real + 1j * imag
        logging.debug(f"Compressed {f.label} through norm {int(block.norm[-1])}")

    label = f.label if sector is None else f"{f.label}|{sector}"
    logging.info(f"Compressed {label} onto {X} norms")
    return CompressedFn(values, label)
