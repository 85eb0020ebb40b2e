"""Truncated Fourier expansion of sector indicators"""
import math
from dataclasses import dataclass, field

import numpy as np
from exceptions import InvalidArgument, PrecisionError
from gaussian import HALF_PI, circle_distance, session_table
from multfun import Sector
from tools import BoundReport

# largest imaginary residue tolerated in a real remainder
IMAGINARY_TOLERANCE = 1e-10

# angles per vectorized remainder chunk
CHUNK = 1 << 16


def unit_phase(u):
    """
    e(-u) = exp(-2 pi i u), reduced modulo 1 first so integer u gives exactly 1
    """
    return np.exp(-2j * np.pi * np.mod(u, 1.0))


@dataclass(frozen=True)
class FourierTruncation:
    """
    b_m(J) for 0 < |m| <= T: 1_J(theta) = delta + sum b_m e^{4 i m theta} + R_T(theta)
    """

    sector: Sector
    T: int
    ms: np.ndarray = field(repr=False)
    coeffs: np.ndarray = field(repr=False)

    def __getitem__(self, m):
        if m == 0 or abs(m) > self.T:
            raise InvalidArgument(f"No coefficient b_{m} in a truncation at T = {self.T}")
        return complex(self.coeffs[m + self.T - (m > 0)])

    def items(self):
        return zip(self.ms.tolist(), self.coeffs.tolist())

    @property
    def density(self):
        return self.sector.density

    def series(self, thetas):
        """
        sum over 0 < |m| <= T of b_m e^{4 i m theta}
        """
        thetas = np.atleast_1d(np.asarray(thetas, dtype=np.float64))
        out = np.empty(thetas.size, dtype=np.complex128)
        for i in range(0, thetas.size, CHUNK):
            out[i : i + CHUNK] = np.exp(4j * np.outer(thetas[i : i + CHUNK], self.ms)) @ self.coeffs
        return out


def fourier_coeffs(sector, T):
    """
    b_m(J) = (e(-m u1) - e(-m u2)) / (2 pi i m) with u_j = theta_j / (pi/2)
    """
    if T < 1:
        raise InvalidArgument(f"T must be at least 1, got {T}")

    T = int(T)
    ms = np.concatenate([np.arange(-T, 0), np.arange(1, T + 1)])
    u1, u2 = sector.theta1 / HALF_PI, sector.theta2 / HALF_PI
    coeffs = (unit_phase(ms * u1) - unit_phase(ms * u2)) / (2j * np.pi * ms)
    return FourierTruncation(sector, T, ms, coeffs)


def _endpoint_mask(trunc, thetas):
    on_first = np.mod(thetas - trunc.sector.theta1, HALF_PI) == 0
    return on_first | (np.mod(thetas - trunc.sector.theta2, HALF_PI) == 0)


def remainder_array(trunc, thetas):
    """
    R_T(theta) = 1_J(theta) - delta - sum b_m e^{4 i m theta}, for angles off the sector endpoints
    """
    thetas = np.atleast_1d(np.asarray(thetas, dtype=np.float64))
    if np.any(_endpoint_mask(trunc, thetas)):
        raise InvalidArgument(f"R_T is undefined at the endpoints of {trunc.sector}")

    values = trunc.sector.contains(thetas) - trunc.density - trunc.series(thetas)
    residue = float(np.max(np.abs(values.imag))) if values.size else 0.0
    if residue > IMAGINARY_TOLERANCE:
        raise PrecisionError(f"Remainder has imaginary residue {residue:.3g}")
    return values.real


def remainder(trunc, theta):
    if not 0 <= theta < HALF_PI:
        raise InvalidArgument(f"theta must lie in [0, pi/2), got {theta}")
    return float(remainder_array(trunc, [theta])[0])


def remainder_shape(trunc, theta):
    """
    min(1, 1/(T |theta - theta1|) + 1/(T |theta - theta2|)), distances taken modulo pi/2
    """
    near = circle_distance(theta, trunc.sector.theta1), circle_distance(theta, trunc.sector.theta2)
    return min(1.0, 1 / (trunc.T * near[0]) + 1 / (trunc.T * near[1]))


def summed_remainder(trunc, X, Y, table=None):
    """
    sum over X < N(a) <= Y of |R_T(arg a)| against (Y - X) log(T + 1) / T + sqrt(Y)

    Ideals sitting exactly on a sector endpoint are skipped.
    """
    if not 0 <= X < Y:
        raise InvalidArgument(f"Need 0 <= X < Y, got X={X}, Y={Y}")
    if table is None or table.limit < math.floor(Y):
        table = session_table(Y)

    args = table.arg[table.window(X, Y)]
    args = args[~_endpoint_mask(trunc, args)]
    measured = math.fsum(np.abs(remainder_array(trunc, args)).tolist())
    bound = (Y - X) * math.log(trunc.T + 1) / trunc.T + math.sqrt(Y)
    return BoundReport(
        "summed_remainder",
        {"theta1": trunc.sector.theta1, "theta2": trunc.sector.theta2, "T": trunc.T, "X": X, "Y": Y},
        measured,
        bound,
    )
