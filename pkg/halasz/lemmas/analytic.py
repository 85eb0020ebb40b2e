"""Mean-square and truncated Perron checks for Dirichlet series over ideals"""
import logging
import math
from typing import NamedTuple

import numpy as np
from exceptions import PreconditionError, QuadratureError
from gaussian import factor_ideal
from multfun import table_for
from pretentious import EulerProduct
from scipy.integrate import quad
from tools import BoundReport

# Gauss-Legendre nodes per panel and the largest panel height
NODES = 16
PANEL_HEIGHT = 0.25

# relative agreement between the panel rule and the halved-panel rule
QUADRATURE_TOLERANCE = 1e-8

# lattice error constant in #{N(a) <= u} = (pi/4) u + O(sqrt u)
LATTICE_CONSTANT = 5.0


def mean_square_dirichlet(c, T, x, sieve=None):
    """
    integral over [-T, T] of |sum c(a) Lambda(a) N(a)^{-it}|^2 against sum N(a) |c(a)|^2 Lambda(a)

    c maps canonical generators to complex weights supported on T^2 <= N(a) <= x.
    """
    if T < 1 or x < T * T:
        raise PreconditionError(f"Need T >= 1 and x >= T^2, got T={T}, x={x}")

    weights = {}
    rhs = []
    for g, weight in c.items():
        if not T * T <= g.norm <= x:
            raise PreconditionError(f"{g} has norm {g.norm} outside [{T * T:g}, {x:g}]")
        factors = factor_ideal(g, sieve)
        if len(factors) != 1 or weight == 0:
            continue
        log_norm = next(iter(factors))[0].log_norm
        weights[g.norm] = weights.get(g.norm, 0j) + complex(weight) * log_norm
        rhs.append(g.norm * abs(weight) ** 2 * log_norm)

    bound = math.fsum(rhs)
    if not weights:
        return BoundReport("mean_square", {"T": T, "x": x, "terms": 0}, 0.0, 1.0, {"closed_form": 0.0})

    norms = np.array(sorted(weights), dtype=np.float64)
    a = np.array([weights[n] for n in sorted(weights)], dtype=np.complex128)
    logs = np.log(norms)

    def integrand(t):
        return abs(np.sum(a * np.exp(-1j * t * logs))) ** 2

    integral, error = quad(integrand, -T, T, epsabs=0.0, epsrel=1e-6, limit=2000)

    # integral of exp(-i t (log n_j - log n_k)) over [-T, T] is 2T sinc(T delta / pi)
    delta = logs[:, None] - logs[None, :]
    kernel = 2 * T * np.sinc(T * delta / np.pi)
    closed_form = float(np.real(np.conj(a) @ kernel @ a))

    logging.debug(f"Mean square over {len(weights)} norms: {integral:.6g} (quadrature error {error:.3g})")
    return BoundReport(
        "mean_square",
        {"T": T, "x": x, "terms": len(weights)},
        integral,
        bound,
        {"closed_form": closed_form},
    )


class PerronResult(NamedTuple):
    integral: complex
    majorant: float


def _panel_rule(g, lo, hi, panels, nodes, weights):
    edges = np.linspace(lo, hi, panels + 1)
    mid, half = (edges[1:] + edges[:-1]) / 2, (edges[1:] - edges[:-1]) / 2
    ts = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    values = g(ts).reshape(panels, nodes.size)
    return (values @ weights) * half


def perron_truncated(f, x, T, sigma, kappa=1.0):
    """
    (1/2 pi i) integral over sigma - iT .. sigma + iT of F(s) x^s / s ds, with the truncation majorant

    The majorant is sum |f(a)| (x/N(a))^sigma min(1, 1/(T |log(x/N(a))|)), the
    ideals of norm x counting 1. Ideals beyond a cutoff K are bounded through the
    lattice count, with kappa bounding |f| there.
    """
    if x <= 1 or sigma < 1 + 1 / math.log(x) - 1e-12:
        raise PreconditionError(f"Need sigma >= 1 + 1/log x, got sigma={sigma}, x={x}")

    euler = EulerProduct(f, max(math.ceil(x), 2), sigma, kappa)
    log_x = math.log(x)

    def integrand(ts):
        s = sigma + 1j * ts
        return np.exp(euler.log(s) + s * log_x) / s

    nodes, weights = np.polynomial.legendre.leggauss(NODES)
    panels = max(1, math.ceil(2 * T / PANEL_HEIGHT))
    coarse = _panel_rule(integrand, -T, T, panels, nodes, weights)
    fine = _panel_rule(integrand, -T, T, 2 * panels, nodes, weights).reshape(panels, 2).sum(axis=1)

    integral = complex(np.sum(fine)) / (2 * math.pi)
    gap = np.abs(coarse - fine)
    if np.sum(gap) > QUADRATURE_TOLERANCE * max(1.0, float(np.sum(np.abs(fine)))):
        worst = int(np.argmax(gap))
        edges = np.linspace(-T, T, panels + 1)
        raise QuadratureError(
            f"Perron quadrature did not converge: panel [{edges[worst]:.6g}, {edges[worst + 1]:.6g}] "
            f"differs by {gap[worst]:.3g} on refinement (total {np.sum(gap):.3g})"
        )

    return PerronResult(integral, perron_majorant(f, x, T, sigma, kappa))


def perron_majorant(f, x, T, sigma, kappa=1.0):
    """
    sum over all ideals of |f(a)| (x/N(a))^sigma min(1, 1/(T |log(x/N(a))|))
    """
    cutoff = max(100 * math.ceil(x), 10_000)
    table = table_for(cutoff)
    count = table.upto(cutoff)

    magnitude = np.abs(f.values(table)[:count])
    ratio = x / table.norm[:count]
    distance = np.abs(np.log(ratio))
    with np.errstate(divide="ignore"):
        damping = np.where(distance == 0, 1.0, np.minimum(1.0, 1.0 / (T * distance)))
    head = math.fsum((magnitude * ratio**sigma * damping).tolist())

    # sum over N(a) > K of N(a)^{-sigma} <= (pi/4) K^{1-sigma}/(sigma-1) + C K^{1/2-sigma} (sigma/(sigma-1/2) + 1)
    tail_count = math.pi / 4 * cutoff ** (1 - sigma) / (sigma - 1)
    tail_count += LATTICE_CONSTANT * cutoff ** (0.5 - sigma) * (sigma / (sigma - 0.5) + 1)
    peak = max(float(np.max(magnitude)), kappa)
    tail = peak * x**sigma * tail_count / (T * math.log(cutoff / x))

    logging.debug(f"Perron majorant at x={x:g}: head {head:.6g} over {count} ideals, tail {tail:.3g}")
    return head + tail