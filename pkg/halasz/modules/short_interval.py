"""Short interval Module"""
import logging

from shortint import ShortIntervalConfig, l2_statistic, l2_unrestricted

from . import Module, parse_window


class ShortIntervalModule(Module):
    """
    Mean squares of short-interval sums over [X/2, X]
    """

    COLUMNS = ["X", "h", "value", "unrestricted"]
    OUTPUT = "short-interval.csv"

    def setup_cli(self, parser):
        self.describe(
            parser,
            "(2/X) integral over [X/2, X] of |(S_{f,J}(x; h) - delta S_f(x; h))/h|^2 (unrestricted=false) "
            "and of |S_f(x; h)/h|^2 (unrestricted=true), with X = x-max (even).",
        )

    async def handle_cli(self, args):
        X = self.x_max(100_000)
        window = self.option("m_window")
        cfg = ShortIntervalConfig(
            X=X,
            h=int(self.option("h", round(X**0.75))),
            f=self.function(),
            sector=self.sector(),
            T=int(self.option("T", 16)),
            m_list=[m for m in parse_window(window) if m] if window is not None else (),
            max_ideals=self.max_ideals(),
        )

        reports = [l2_statistic(cfg), l2_unrestricted(cfg)]
        for m, value in sorted(reports[0].decomposition.items()):
            logging.info(f"Mode {m}: {value:.6g}")
        self.emit([{"X": r.X, "h": r.h, "value": r.value, "unrestricted": r.unrestricted} for r in reports])
