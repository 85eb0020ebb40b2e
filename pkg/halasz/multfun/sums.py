"""Partial, interval and sector sums over ideals"""
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from exceptions import InvalidArgument
from gaussian import HALF_PI, session_table


@dataclass(frozen=True)
class Sector:
    """
    The half-open range of arguments [theta1, theta2) inside [0, pi/2)
    """

    theta1: float
    theta2: float

    def __post_init__(self):
        if not 0 <= self.theta1 < self.theta2 <= HALF_PI:
            raise InvalidArgument(f"Sector needs 0 <= theta1 < theta2 <= pi/2, got [{self.theta1}, {self.theta2})")

    def __str__(self):
        return f"[{self.theta1:.6g}, {self.theta2:.6g})"

    @classmethod
    def from_fractions(cls, theta1, theta2):
        """
        Sector from rational multiples of pi, e.g. ("0", "1/4") for [0, pi/4)
        """
        try:
            return cls(float(Fraction(theta1)) * math.pi, float(Fraction(theta2)) * math.pi)
        except (ValueError, ZeroDivisionError) as exp:
            raise InvalidArgument(f"Sector endpoints must be rationals such as 1/4, got {theta1}, {theta2}") from exp

    @property
    def density(self):
        return (self.theta2 - self.theta1) / HALF_PI

    @property
    def is_full(self):
        return self.theta1 == 0 and self.theta2 == HALF_PI

    def contains(self, arg):
        arg = np.asarray(arg)
        return (arg >= self.theta1) & (arg < self.theta2)


FULL_SECTOR = Sector(0.0, HALF_PI)


def fsum_complex(values):
    """
    Compensated sum of a complex array
    """
    values = np.asarray(values, dtype=np.complex128)
    return complex(math.fsum(values.real.tolist()), math.fsum(values.imag.tolist()))


def table_for(limit, table=None):
    if table is not None and table.limit >= math.floor(limit):
        return table
    return session_table(max(limit, 1))


def _window_sum(f, lo, hi, sector, table):
    table = table_for(hi, table)
    window = table.window(lo, hi)
    values = f.values(table)[window]
    if sector is not None and not sector.is_full:
        values = values[sector.contains(table.arg[window])]
    return fsum_complex(values)


def partial_sum(f, x, table=None):
    """
    S_f(x): sum of f over ideals with norm <= x
    """
    if x < 0:
        raise InvalidArgument(f"x must be non-negative, got {x}")
    return _window_sum(f, 0, x, None, table)


def interval_sum(f, x, h, table=None):
    """
    S_f(x; h): sum over x < norm <= x + h
    """
    if x < 0 or h < 1:
        raise InvalidArgument(f"Need x >= 0 and h >= 1, got x={x}, h={h}")
    return _window_sum(f, x, x + h, None, table)


def sector_sum(f, sector, x, table=None):
    """
    S_{f,J}(x): sum over ideals with norm <= x and argument in the sector
    """
    if x < 0:
        raise InvalidArgument(f"x must be non-negative, got {x}")
    return _window_sum(f, 0, x, sector, table)


def sector_interval_sum(f, sector, x, h, table=None):
    if x < 0 or h < 1:
        raise InvalidArgument(f"Need x >= 0 and h >= 1, got x={x}, h={h}")
    return _window_sum(f, x, x + h, sector, table)
