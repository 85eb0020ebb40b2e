"""Lemma regression suite and the calibrate-then-freeze protocol"""
import logging
import math
from dataclasses import dataclass

from exceptions import CalibrationException
from gaussian import session_sieve, session_table
from multfun import mobius, one, partial_sum, prime_hash
from pretentious import DistanceQuery, halasz_rhs, minimize_over_t
from shortint import compress_mode, h_factor
from tools import BoundReport, map_ordered

from .analytic import mean_square_dirichlet
from .counting import brun_titchmarsh_mod4, lattice_count_deviation, mertens_ideal, psi_report, short_interval_vm

SAFETY_FACTOR = 2.0

# seed of the pseudo-random mean-square weights
MEAN_SQUARE_SEED = 2024


def decades(lo, hi):
    """
    10^k for lo <= 10^k <= hi
    """
    return [10**k for k in range(math.ceil(math.log10(lo)), math.floor(math.log10(hi)) + 1)]


def _mertens(x):
    return BoundReport("mertens", {"x": x}, abs(mertens_ideal(x)), 1.0)


def _mean_square(T, x):
    sieve = session_sieve(x)
    weights = {}
    for prime in sieve.ideals()[sieve.upto(T * T - 1) : sieve.upto(x)]:
        weights[prime.generator] = -1.0 if prime_hash(MEAN_SQUARE_SEED, prime.norm, prime.kind) >> 63 else 1.0
    return mean_square_dirichlet(weights, T, x, sieve)


def _h_factors(f, X):
    first, second = h_factor(compress_mode(f, 0, X), X)
    return [
        BoundReport("h_factor_log", {"f": f.label, "X": X}, first, math.log(X)),
        BoundReport("h_factor_flat", {"f": f.label, "X": X}, second, 1.0),
    ]


def _mean_value(f, x):
    query = DistanceQuery(f, x)
    M = minimize_over_t(query).value
    measured = abs(partial_sum(f, x))
    return BoundReport("mean_value_thm1_2", {"f": f.label, "x": x}, measured, halasz_rhs("thm1_2", x=x, M=M), {"M": M})


def lemma_jobs(x_max):
    """
    The parameter lattice as (description, thunk) pairs; each thunk returns BoundReports
    """
    x_max = math.floor(x_max)
    if x_max < 1000:
        raise CalibrationException(f"The lemma lattice needs x_max >= 1000, got {x_max}")

    jobs = []
    for x in decades(1000, x_max):
        jobs.append((f"psi {x}", lambda x=x: [psi_report(x)]))
        jobs.append((f"mertens {x}", lambda x=x: [_mertens(x)]))
        jobs.append((f"lattice {x}", lambda x=x: [lattice_count_deviation(x)]))
        for H in sorted({math.isqrt(x), x // 10, x}):
            jobs.append((f"brun-titchmarsh {x} {H}", lambda x=x, H=H: [brun_titchmarsh_mod4(x, H)]))
        for T in (2, 10, 30):
            if x >= T * T:
                jobs.append((f"short-interval {x} {T}", lambda x=x, T=T: [short_interval_vm(x, T)]))

    for T in (3, 10):
        x = min(x_max, 10_000)
        jobs.append((f"mean-square {T} {x}", lambda T=T, x=x: [_mean_square(T, x)]))

    X = min(x_max, 100_000)
    for f in (one(), mobius()):
        jobs.append((f"h-factors {f.label} {X}", lambda f=f: _h_factors(f, X)))

    for x in decades(10_000, x_max):
        jobs.append((f"mean value {x}", lambda x=x: [_mean_value(mobius(), x)]))
    return jobs


def prepare_suite(x_max):
    """
    Warm the shared sieve and ideal table, then list the jobs
    """
    session_sieve(2 * math.floor(x_max))
    session_table(x_max)
    return lemma_jobs(x_max)


def run_suite(x_max, threads=1):
    """
    Every report of the lattice, in a fixed order regardless of threads
    """
    jobs = prepare_suite(x_max)
    logging.info(f"Running {len(jobs)} lemma checks up to {x_max} on {threads} worker(s)")

    def run(job):
        name, thunk = job
        logging.debug(f"Checking {name}")
        return thunk()

    return [report for reports in map_ordered(run, jobs, threads) for report in reports]


@dataclass(frozen=True)
class Verdict:
    report: BoundReport
    constant: float

    @property
    def ok(self):
        return math.isnan(self.constant) or self.report.ratio <= self.constant

    def row(self):
        return self.report.row(self.constant)


def calibrate(reports, store, safety=SAFETY_FACTOR):
    """
    Freeze safety * (largest ratio) per tag into the store
    """
    worst = {}
    for report in reports:
        if report.tag not in worst or report.ratio > worst[report.tag].ratio:
            worst[report.tag] = report

    for tag, report in sorted(worst.items()):
        constant = safety * report.ratio if report.ratio > 0 else safety * math.ulp(1.0)
        store.set(tag, report.param_hash, constant)
        logging.info(f"Calibrated {tag} = {constant:.6g} (worst ratio {report.ratio:.6g} at {report.param_hash})")
    return [Verdict(report, store.get(report.tag)) for report in reports]


def check_against(reports, store):
    """
    Compare every ratio with the frozen constant of its tag; uncalibrated tags pass with a warning
    """
    verdicts = []
    for report in reports:
        constant = store.get(report.tag)
        if constant is None:
            logging.warning(f"No frozen constant for {report.tag}; reporting only")
            constant = math.nan
        verdict = Verdict(report, constant)
        if not verdict.ok:
            logging.error(f"{report.tag} [{report.param_hash}]: ratio {report.ratio:.6g} exceeds {constant:.6g}")
        verdicts.append(verdict)
    return verdicts
