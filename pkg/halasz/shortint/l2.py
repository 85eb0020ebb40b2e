"""Mean square of short-interval sums over [X/2, X]"""
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Sequence

import numpy as np
from exceptions import InvalidArgument, PreconditionError
from gaussian import DEFAULT_MAX_IDEALS
from multfun import FULL_SECTOR, MultFn, Sector, norm_compress
from sectorial import fourier_coeffs

from .modes import compress_mode


@dataclass(frozen=True)
class ShortIntervalConfig:
    """
    One short-interval experiment: windows (x, x + h] for x in [X/2, X]
    """

    X: int
    h: int
    f: MultFn
    sector: Sector = FULL_SECTOR
    T: int = 16
    m_list: Sequence[int] = ()
    max_ideals: int = DEFAULT_MAX_IDEALS

    def __post_init__(self):
        if not 1 <= self.h < self.X:
            raise InvalidArgument(f"Need 1 <= h < X, got X={self.X}, h={self.h}")
        if self.X % 2:
            raise PreconditionError(f"X must be even so that X/2 is a grid point, got {self.X}")
        if self.h * self.h <= self.X:
            logging.warning(
                f"h = {self.h} is at most sqrt(X) = {math.sqrt(self.X):.6g}; outside the short-interval regime"
            )


@dataclass(frozen=True)
class L2Report:
    X: int
    h: int
    value: float
    unrestricted: bool
    decomposition: Dict[int, float] = field(default_factory=dict)


def window_sums(g, X, h):
    """
    W(n) = sum over n < k <= n + h of g(k), for n = X/2 .. X - 1

    The sum over (x, x + h] is W(floor(x)) for integer h, so these are the
    values of the integrand on each unit interval.
    """
    cumulative = g.cumulative()
    start = X // 2
    return cumulative[start + h : X + h] - cumulative[start:X]


def mean_square(differences, X, h):
    """
    (2/X) sum over unit intervals of |D(n)/h|^2
    """
    squares = np.abs(differences / h) ** 2
    return 2.0 / X * math.fsum(squares.tolist())


def l2_statistic(cfg):
    """
    (2/X) integral over [X/2, X] of |(S_{f,J}(x; h) - delta S_f(x; h)) / h|^2 dx
    """
    limit = cfg.X + cfg.h
    full = norm_compress(cfg.f, limit, max_ideals=cfg.max_ideals)
    windows = window_sums(full, cfg.X, cfg.h)

    if cfg.sector.is_full:
        differences = np.zeros_like(windows)
    else:
        restricted = norm_compress(cfg.f, limit, sector=cfg.sector, max_ideals=cfg.max_ideals)
        differences = window_sums(restricted, cfg.X, cfg.h) - cfg.sector.density * windows

    decomposition = {}
    if cfg.m_list:
        trunc = fourier_coeffs(cfg.sector, cfg.T)
        for m in cfg.m_list:
            if m == 0 or abs(m) > cfg.T:
                raise InvalidArgument(f"Mode {m} is outside 0 < |m| <= T = {cfg.T}")
            mode = compress_mode(cfg.f, m, limit, cfg.max_ideals)
            decomposition[m] = mean_square(trunc[m] * window_sums(mode, cfg.X, cfg.h), cfg.X, cfg.h)

    value = mean_square(differences, cfg.X, cfg.h)
    logging.info(f"L2 statistic of {cfg.f.label} on {cfg.sector} at X={cfg.X}, h={cfg.h}: {value:.6g}")
    return L2Report(cfg.X, cfg.h, value, False, decomposition)


def l2_unrestricted(cfg):
    """
    (2/X) integral over [X/2, X] of |S_f(x; h) / h|^2 dx
    """
    full = norm_compress(cfg.f, cfg.X + cfg.h, max_ideals=cfg.max_ideals)
    value = mean_square(window_sums(full, cfg.X, cfg.h), cfg.X, cfg.h)
    logging.info(f"Unrestricted L2 statistic of {cfg.f.label} at X={cfg.X}, h={cfg.h}: {value:.6g}")
    return L2Report(cfg.X, cfg.h, value, True)
