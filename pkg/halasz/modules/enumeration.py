"""Enumeration Module"""
import logging
import math

from gaussian import count_ideals

from . import Module, checkpoints


class EnumerateModule(Module):
    """
    Ideal counts against the lattice main term
    """

    COLUMNS = ["x", "count", "main_term", "deviation", "bound"]
    OUTPUT = "enumerate.csv"

    def setup_cli(self, parser):
        self.describe(parser, "#{N(a) <= x} against (pi/4) x for x = 10, 100, ..., x-max.")

    async def handle_cli(self, args):
        x_max = self.x_max(100_000)
        rows = []
        for x in checkpoints(10, x_max):
            count = count_ideals(x)
            main_term = math.pi / 4 * x
            logging.debug(f"{count} ideals of norm <= {x}")
            rows.append(
                {
                    "x": x,
                    "count": count,
                    "main_term": main_term,
                    "deviation": count - main_term,
                    "bound": 5 * math.sqrt(x),
                }
            )
        self.emit(rows)
