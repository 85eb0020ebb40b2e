"""Halasz parameters and the mean-value bounds they feed"""
import logging
import math
from dataclasses import dataclass

import numpy as np
from exceptions import ContractViolation, InvalidArgument
from multfun import check_lambda_bound
from scipy.optimize import minimize_scalar
from tools import BoundReport, map_ordered

from .distance import GRID_SPACING, REFINE_XATOL, DistanceQuery, distance_profile
from .euler import EulerProduct

# t-values per Euler product evaluation batch
BATCH = 4096


@dataclass(frozen=True)
class HalaszParams:
    x: float
    kappa: float
    c0: float
    t_cap: float
    M: float
    M_plus: float
    t_star: float = 0.0
    tail_bound: float = 0.0


def _euler_for(f, x, kappa, c0):
    return EulerProduct(f, math.ceil(x), c0, kappa)


def halasz_M(f, kappa, x, t_center=0.0, spacing=None, threads=1):
    """
    M(x) from max over |t - t_center| <= (log x)^kappa of |F(c0 + it) / (c0 + it)| = e^{-M} (log x)^kappa
    """
    if x < 3:
        raise InvalidArgument(f"x must be at least 3, got {x}")
    check = check_lambda_bound(f, kappa, x)
    if not check:
        raise ContractViolation(
            f"|Lambda_{f.label}({check.prime}^{check.k})| = {abs(check.value):.6g} exceeds {check.bound:.6g}"
        )

    log_x = math.log(x)
    c0 = 1 + 1 / log_x
    t_cap = log_x**kappa
    spacing = spacing or GRID_SPACING / log_x
    euler = _euler_for(f, x, kappa, c0)

    def ratio(ts):
        s = c0 + 1j * np.asarray(ts)
        return np.abs(np.exp(euler.log(s)) / s)

    count = max(1, math.ceil(2 * t_cap / spacing)) + 1
    ts = np.linspace(t_center - t_cap, t_center + t_cap, count)
    values = np.concatenate(map_ordered(ratio, [ts[i : i + BATCH] for i in range(0, ts.size, BATCH)], threads))

    peak = np.max(values)
    ties = np.flatnonzero(values == peak)
    best = int(ties[np.argmin(np.abs(ts[ties] - t_center))])
    t_star, peak = float(ts[best]), float(peak)

    step = float(ts[1] - ts[0]) if ts.size > 1 else 0.0
    if step > 0:
        bounds = (max(ts[0], t_star - step), min(ts[-1], t_star + step))
        res = minimize_scalar(
            lambda t: -float(ratio([t])[0]), bounds=bounds, method="bounded", options={"xatol": REFINE_XATOL}
        )
        if -res.fun > peak:
            t_star, peak = float(res.x), float(-res.fun)

    M = kappa * math.log(log_x) - math.log(peak)
    logging.info(f"Halasz M({x:g}) = {M:.6g} for {f.label} (max at t = {t_star:.6g})")
    return HalaszParams(x, kappa, c0, t_cap, M, max(M, 0.0), t_star, euler.tail_bound(c0))


def _mean_value_term(M):
    return (1 + M) * math.exp(-M)


def _rhs_thm1_2(x, M, **_):
    log_x = math.log(x)
    return _mean_value_term(M) * x + x / log_x * math.log(log_x)


def _rhs_thm1_4(x, M, kappa=1.0, **_):
    log_x = math.log(x)
    M_plus = max(M, 0.0)
    return _mean_value_term(M_plus) * x * log_x ** (kappa - 1) + x / log_x * math.log(log_x) ** kappa


def _rhs_thm5_5(x, M_list, T, **_):
    log_x = math.log(x)
    log_T = math.log(T + 1)
    worst = max(_mean_value_term(M) for M in M_list)
    return x * log_T * worst + x / log_x * math.log(log_x) * log_T + x * log_T / T + math.sqrt(x)


def _rhs_mean_value_decay(x, A, **_):
    log_x = math.log(x)
    return x * math.log(log_x) / log_x**A


def _rhs_sectorial_decay(x, A, T, **_):
    log_x = math.log(x)
    log_T = math.log(T + 1)
    return x * log_T * math.log(log_x) / log_x**A + x * log_T / T + math.sqrt(x)


RHS = {
    "thm1_2": _rhs_thm1_2,
    "thm1_4": _rhs_thm1_4,
    "cor4_2": _rhs_thm1_4,
    "thm5_5": _rhs_thm5_5,
    "mean_value_decay": _rhs_mean_value_decay,
    "sectorial_decay": _rhs_sectorial_decay,
}


def halasz_rhs(kind, **inputs):
    """
    Right-hand side of a mean-value bound with implied constant 1

    thm1_2: x, M (the pretentious M over |t| <= log x)
    thm1_4 / cor4_2: x, M, kappa
    thm5_5: x, M_list (M_m for 1 <= |m| <= T), T
    mean_value_decay: x, A
    sectorial_decay: x, A, T
    """
    if kind not in RHS:
        raise InvalidArgument(f"Unknown bound {kind}, expected one of {sorted(RHS)}")
    try:
        return RHS[kind](**inputs)
    except TypeError as exp:
        raise InvalidArgument(f"Bound {kind} is missing inputs: {exp}") from exp


def check_euler_pretentious_bound(f, kappa, x, ts=None, samples=41):
    """
    |F(c0 + it)| against (log x)^kappa exp(-D_kappa(f, N^{it}; x)^2), worst sampled t
    """
    log_x = math.log(x)
    c0 = 1 + 1 / log_x
    if ts is None:
        ts = np.linspace(-log_x, log_x, samples)
    ts = np.atleast_1d(np.asarray(ts, dtype=np.float64))

    euler = _euler_for(f, x, kappa, c0)
    measured = np.abs(np.exp(euler.log(c0 + 1j * ts)))
    distances = distance_profile(DistanceQuery(f, x, kappa=kappa, t_range=(float(ts.min()), float(ts.max()))), ts)
    bounds = log_x**kappa * np.exp(-distances)

    worst = int(np.argmax(measured / bounds))
    return BoundReport(
        "euler_pretentious",
        {"f": f.label, "kappa": kappa, "x": x},
        float(measured[worst]),
        float(bounds[worst]),
        {"t": float(ts[worst]), "distance_sq": float(distances[worst])},
    )
