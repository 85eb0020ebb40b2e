"""Fourier decomposition of sector sums"""
import logging
import math

import numpy as np
from exceptions import InvalidArgument
from multfun import fsum_complex, norm_compress, table_for
from pretentious import halasz_rhs, pretentious_profile
from tools import BoundReport

from .fourier import CHUNK, fourier_coeffs


def twisted_window_sums(values, args, ms):
    """
    sum of values * e^{4 i m arg} for every m, accumulated chunk by chunk in a fixed order
    """
    ms = np.asarray(ms)
    partials = []
    for i in range(0, values.size, CHUNK):
        phases = np.exp(4j * np.outer(args[i : i + CHUNK], ms))
        partials.append(values[i : i + CHUNK] @ phases)
    if not partials:
        return np.zeros(ms.size, dtype=np.complex128)
    stacked = np.array(partials)
    return np.array([fsum_complex(stacked[:, j]) for j in range(ms.size)])


def sector_decomposition_residual(f, sector, T, X, Y, table=None, compressed=False):
    """
    S_{f,J}(X, Y] - delta S_f(X, Y] minus sum b_m S_{f lambda_m}(X, Y], against (Y - X) log(T + 1)/T + sqrt(Y)

    With compressed the left side is read off norm-compressed arrays instead of
    the ideal table.
    """
    if not 0 <= X < Y:
        raise InvalidArgument(f"Need 0 <= X < Y, got X={X}, Y={Y}")

    table = table_for(Y, table)
    window = table.window(X, Y)
    values = f.values(table)[window]
    args = table.arg[window]
    trunc = fourier_coeffs(sector, T)

    if compressed:
        sector_sum = norm_compress(f, Y, sector=sector).window_sum(X, Y - X)
        full_sum = norm_compress(f, Y).window_sum(X, Y - X)
    else:
        sector_sum = fsum_complex(values[sector.contains(args)])
        full_sum = fsum_complex(values)

    left = sector_sum - trunc.density * full_sum
    right = complex(np.sum(trunc.coeffs * twisted_window_sums(values, args, trunc.ms))) if not sector.is_full else 0j
    residual = left - right

    logging.debug(f"Sector decomposition of {f.label} on ({X:g}, {Y:g}]: residual {abs(residual):.6g}")
    return BoundReport(
        "sector_decomposition",
        {"f": f.label, "theta1": sector.theta1, "theta2": sector.theta2, "T": T, "X": X, "Y": Y},
        abs(residual),
        (Y - X) * math.log(T + 1) / T + math.sqrt(Y),
        {"S_fJ": sector_sum, "delta_S_f": trunc.density * full_sum, "residual": residual},
    )


def sectorial_halasz_report(f, sector, x, T, threads=1, table=None):
    """
    |S_{f,J}(x) - delta S_f(x)| against the sectorial mean-value bound built from M_m, 1 <= |m| <= T
    """
    table = table_for(x, table)
    count = table.upto(x)
    values = f.values(table)[:count]

    sector_sum = fsum_complex(values[sector.contains(table.arg[:count])])
    deviation = abs(sector_sum - sector.density * fsum_complex(values))

    ms = [m for m in range(-T, T + 1) if m]
    profile = pretentious_profile(f, ms, x, threads=threads)
    M_list = [result.value for _, result in profile]
    bound = halasz_rhs("thm5_5", x=x, M_list=M_list, T=T)

    return BoundReport(
        "sectorial_halasz",
        {"f": f.label, "theta1": sector.theta1, "theta2": sector.theta2, "T": T, "x": x},
        deviation,
        bound,
        {"min_M": min(M_list), "certified": all(result.certified for _, result in profile)},
    )
