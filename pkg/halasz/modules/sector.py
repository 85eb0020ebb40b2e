"""Sectorial Module"""
import logging

from gaussian import session_table
from sectorial import sector_decomposition_residual

from . import Module, checkpoints


class SectorialModule(Module):
    """
    Sector sums against their truncated Fourier expansion
    """

    COLUMNS = ["x", "S_fJ", "delta_S_f", "residual", "bound"]
    OUTPUT = "sectorial.csv"

    def setup_cli(self, parser):
        self.describe(
            parser,
            "S_{f,J}(x) and delta_J S_f(x) (real parts) with the modulus of the residual after subtracting "
            "the modes 0 < |m| <= T, for x = 1000, 10000, ..., x-max.",
        )

    async def handle_cli(self, args):
        x_max = self.x_max(1_000_000)
        T = int(self.option("T", 16))
        f = self.function()
        sector = self.sector()
        table = session_table(x_max, self.max_ideals())
        logging.info(f"Decomposing sums of {f.label} on {sector} with T={T}")

        rows = []
        for x in checkpoints(min(1000, x_max), x_max):
            report = sector_decomposition_residual(f, sector, T, 0, x, table)
            rows.append(
                {
                    "x": x,
                    "S_fJ": report.details["S_fJ"].real,
                    "delta_S_f": report.details["delta_S_f"].real,
                    "residual": report.measured,
                    "bound": report.bound,
                }
            )
        self.emit(rows)
