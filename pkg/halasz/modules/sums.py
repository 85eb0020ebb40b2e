"""Sum Module"""
import logging
import math

from exceptions import ContractViolation
from gaussian import session_table
from multfun import partial_sum
from pretentious import DistanceQuery, halasz_rhs, minimize_over_t

from . import Module, checkpoints


class SumModule(Module):
    """
    Partial sums S_f(x) next to the mean-value bound
    """

    COLUMNS = ["x", "re", "im", "abs_over_x", "rhs_thm1_2"]
    OUTPUT = "sum.csv"

    def setup_cli(self, parser):
        self.describe(
            parser,
            "S_f(x) for x = 100, 1000, ..., x-max. rhs_thm1_2 is (1 + M) exp(-M) x + x log log x / log x, "
            "or nan when f is not bounded by 1 on primes.",
        )

    def _rhs(self, f, x):
        try:
            M = minimize_over_t(DistanceQuery(f, x), threads=self.threads(), **self.minimizer()).value
        except ContractViolation as exp:
            logging.warning(f"No mean-value bound for {f.label}: {exp}")
            return math.nan
        return halasz_rhs("thm1_2", x=x, M=M)

    async def handle_cli(self, args):
        x_max = self.x_max(100_000)
        f = self.function()
        table = session_table(x_max, self.max_ideals())

        rows = []
        for x in checkpoints(min(100, x_max), x_max):
            total = partial_sum(f, x, table)
            rows.append(
                {
                    "x": x,
                    "re": total.real,
                    "im": total.imag,
                    "abs_over_x": abs(total) / x,
                    "rhs_thm1_2": self._rhs(f, x),
                }
            )
        self.emit(rows)
