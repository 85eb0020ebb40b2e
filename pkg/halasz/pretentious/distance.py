"""Pretentious distances and their minimization over the twist N^{it}"""
import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np
from exceptions import ContractViolation, InvalidArgument
from gaussian import session_sieve
from multfun import MultFn
from scipy.optimize import minimize_scalar
from tools import map_ordered

# grid spacing in units of 1/log x
GRID_SPACING = 0.05

# refinement width for the bounded scalar minimizer
REFINE_XATOL = 1e-6

# grids with more points than this fall back to the multi-start heuristic
CERTIFY_LIMIT = 10_000_000

HEURISTIC_POINTS = 100_000
HEURISTIC_STARTS = 8

CHUNK_ENTRIES = 1 << 21

# |f(p)| may exceed kappa by this relative amount before it counts as a violation
MODULUS_TOLERANCE = 1e-12


@dataclass
class DistanceQuery:
    """
    D_kappa(f lambda_m, g N^{it}; x)^2 as a function of t on t_range

    The prime data (f(p) lambda_m(p) conj(g(p)), 1/N(p), log N(p)) is gathered on
    first use and reused across evaluations.
    """

    f: MultFn
    x: float
    twist_m: int = 0
    kappa: float = 1.0
    t_range: Optional[Tuple[float, float]] = None
    comparator: Optional[MultFn] = None
    _primes: tuple = field(default=None, repr=False)

    def __post_init__(self):
        if self.x < 2:
            raise InvalidArgument(f"x must be at least 2, got {self.x}")
        if self.kappa < 1:
            raise InvalidArgument(f"kappa must be at least 1, got {self.kappa}")
        if self.t_range is None:
            self.t_range = (-math.log(self.x), math.log(self.x))
        if self.t_range[0] > self.t_range[1]:
            raise InvalidArgument(f"Empty t-range {self.t_range}")

    def prime_data(self):
        if self._primes is None:
            sieve = session_sieve(max(math.floor(self.x), 2))
            count = sieve.upto(self.x)
            primes = sieve.ideals()[:count]

            values = np.array([self.f.local(prime, 1) for prime in primes], dtype=np.complex128)
            self._check_modulus(values, primes, self.kappa, self.f.label)
            coefficients = values * np.exp(4j * self.twist_m * sieve.args[:count])
            if self.comparator is not None:
                comparator = np.array([self.comparator.local(prime, 1) for prime in primes], dtype=np.complex128)
                self._check_modulus(comparator, primes, 1.0, self.comparator.label)
                coefficients *= np.conj(comparator)

            self._primes = (coefficients, 1.0 / sieve.norms[:count], sieve.log_norms[:count])
        return self._primes

    @staticmethod
    def _check_modulus(values, primes, bound, label):
        over = np.flatnonzero(np.abs(values) > bound * (1 + MODULUS_TOLERANCE))
        if over.size:
            prime = primes[int(over[0])]
            raise ContractViolation(f"|{label}({prime})| = {abs(values[over[0]]):.6g} exceeds {bound}")

    @property
    def lipschitz(self):
        """
        Bound on |d/dt| of the distance
        """
        coefficients, weights, log_norms = self.prime_data()
        return float(np.sum(np.abs(coefficients) * weights * log_norms))


@dataclass(frozen=True)
class MinimizerResult:
    t_star: float
    value: float
    certified: bool
    grid_spacing: float
    t_range: Tuple[float, float] = (0.0, 0.0)


def distance_sq(q, t):
    """
    sum over N(p) <= x of (kappa - Re(f(p) lambda_m(p) conj(g(p)) N(p)^{-it})) / N(p)
    """
    coefficients, weights, log_norms = q.prime_data()
    terms = (q.kappa - np.real(coefficients * np.exp(-1j * t * log_norms))) * weights
    return max(math.fsum(terms.tolist()), 0.0)


def distance_profile(q, ts):
    """
    distance_sq at every t of an array
    """
    coefficients, weights, log_norms = q.prime_data()
    ts = np.atleast_1d(np.asarray(ts, dtype=np.float64))
    base = q.kappa * float(np.sum(weights))
    step = max(1, CHUNK_ENTRIES // max(1, log_norms.size))

    values = np.empty(ts.size, dtype=np.float64)
    weighted = coefficients * weights
    for i in range(0, ts.size, step):
        phases = np.exp(-1j * np.outer(ts[i : i + step], log_norms))
        values[i : i + step] = base - np.real(phases @ weighted)
    return np.maximum(values, 0.0)


def best_point(ts, values):
    """
    (t, value) of the smallest value, ties broken towards smaller |t|
    """
    low = np.min(values)
    ties = np.flatnonzero(values == low)
    winner = ties[np.argmin(np.abs(ts[ties]))]
    return float(ts[winner]), float(values[winner])


def _chunks(q, ts):
    step = max(1, CHUNK_ENTRIES // max(1, q.prime_data()[2].size))
    return [ts[i : i + step] for i in range(0, ts.size, step)]


def _scan(q, ts, threads):
    results = map_ordered(lambda chunk: best_point(chunk, distance_profile(q, chunk)), _chunks(q, ts), threads)
    return best_point(np.array([t for t, _ in results]), np.array([value for _, value in results]))


def _refine(q, t, width):
    lo, hi = q.t_range
    bounds = (max(lo, t - width), min(hi, t + width))
    if bounds[1] - bounds[0] <= REFINE_XATOL:
        return t, distance_sq(q, t)
    res = minimize_scalar(lambda u: distance_sq(q, u), bounds=bounds, method="bounded", options={"xatol": REFINE_XATOL})
    return float(res.x), float(res.fun)


def _grid(lo, hi, spacing):
    count = max(1, math.ceil((hi - lo) / spacing)) + 1
    return np.linspace(lo, hi, count)


def minimize_over_t(q, spacing=None, certify_limit=CERTIFY_LIMIT, threads=1):
    """
    min over t in q.t_range of distance_sq(q, t)

    Scans a grid of spacing 0.05/log x and refines the best grid point with a
    bounded Brent search. Ranges whose grid would exceed certify_limit points are
    scanned coarsely instead and refined from several starts; such results are
    not certified.
    """
    lo, hi = q.t_range
    spacing = spacing or GRID_SPACING / math.log(q.x)

    if (hi - lo) / spacing + 1 <= certify_limit:
        ts = _grid(lo, hi, spacing)
        grid_spacing = float(ts[1] - ts[0]) if ts.size > 1 else 0.0
        t_grid, v_grid = _scan(q, ts, threads)
        t_ref, v_ref = _refine(q, t_grid, grid_spacing)
        if v_ref < v_grid:
            t_grid, v_grid = t_ref, v_ref
        return MinimizerResult(t_grid, v_grid, True, grid_spacing, (lo, hi))

    ts = np.linspace(lo, hi, HEURISTIC_POINTS)
    coarse = float(ts[1] - ts[0])
    logging.warning(
        f"t-range [{lo:.6g}, {hi:.6g}] needs more than {certify_limit} grid points; "
        f"using a coarse scan at spacing {coarse:.3g} (uncertified)"
    )
    values = np.concatenate(map_ordered(lambda chunk: distance_profile(q, chunk), _chunks(q, ts), threads))
    inner = (values[1:-1] <= values[:-2]) & (values[1:-1] <= values[2:])
    candidates = np.concatenate([[0], np.flatnonzero(inner) + 1, [ts.size - 1]])
    candidates = candidates[np.argsort(values[candidates], kind="stable")][:HEURISTIC_STARTS]

    t_best, v_best = best_point(ts, values)
    for index in sorted(candidates.tolist()):
        t_ref, v_ref = _refine(q, float(ts[index]), coarse)
        if v_ref < v_best or (v_ref == v_best and abs(t_ref) < abs(t_best)):
            t_best, v_best = t_ref, v_ref
    return MinimizerResult(t_best, v_best, False, coarse, (lo, hi))


def pretentious_profile(f, ms, x, long_range=False, kappa=1.0, spacing=None, certify_limit=CERTIFY_LIMIT, threads=1):
    """
    (m, minimizer) for every m: M_m(x) over |t| <= log x, or over |t| <= 2x with long_range
    """
    cap = 2 * x if long_range else math.log(x)
    profile = []
    for m in ms:
        query = DistanceQuery(f, x, twist_m=m, kappa=kappa, t_range=(-cap, cap))
        result = minimize_over_t(query, spacing, certify_limit, threads)
        logging.info(f"M_{m}({x:g}) = {result.value:.6g} at t = {result.t_star:.6g}")
        profile.append((m, result))
    return profile
