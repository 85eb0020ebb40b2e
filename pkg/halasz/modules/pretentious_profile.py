"""Pretentious profile Module"""
from pretentious import pretentious_profile

from . import Module, parse_window


class PretentiousProfileModule(Module):
    """
    M_m(x) for a window of angular twists
    """

    COLUMNS = ["m", "t_star", "M_m", "certified"]
    OUTPUT = "pretentious-profile.csv"

    def setup_cli(self, parser):
        parser.add_argument(
            "--long", dest="long_range", action="store_true", default=None, help="minimize over |t| <= 2x"
        )
        self.describe(parser, "min over t of D(f lambda_m, N^{it}; x)^2 for every m in the --m window at x = x-max.")

    async def handle_cli(self, args):
        x_max = self.x_max(100_000)
        ms = parse_window(self.option("m_window", "-4..4"))
        profile = pretentious_profile(
            self.function(),
            ms,
            x_max,
            long_range=bool(self.option("long_range", False)),
            threads=self.threads(),
            **self.minimizer(),
        )
        self.emit(
            [
                {"m": m, "t_star": result.t_star, "M_m": result.value, "certified": result.certified}
                for m, result in profile
            ]
        )
