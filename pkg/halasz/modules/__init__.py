"""Module"""
import math

from exceptions import InvalidArgument
from gaussian import DEFAULT_MAX_IDEALS
from multfun import AngularCharacter, NormPower, Sector, builtin
from pretentious.distance import CERTIFY_LIMIT
from tools import emit_csv

FUNCTIONS = ["one", "mu", "liouville", "d2", "random", "random-circle"]


class Module:
    """
    Base class for harness subcommands

    A module adds its flags to an argparse sub parser, reads the resolved run
    configuration (file values with flags applied on top) and writes its CSV
    with a fixed column order.
    """

    COLUMNS = []
    OUTPUT = "report.csv"

    def __init__(self):
        self.config = None

    def initialize(self, config):
        self.config = config

    def setup_cli(self, parser):
        """
        Setup argparse sub parser for direct CLI usage
        """

    async def handle_cli(self, args):
        """
        Run from CLI
        """

    def describe(self, parser, text):
        parser.description = f"{text} CSV columns: {', '.join(self.COLUMNS)}."

    def option(self, key, fallback=None):
        value = self.config.optional(key, fallback)
        return fallback if value is None else value

    def emit(self, rows):
        return emit_csv(rows, self.COLUMNS, self.option("output", self.OUTPUT))

    def x_max(self, fallback):
        value = int(self.option("x_max", fallback))
        if value < 2:
            raise InvalidArgument(f"x-max must be at least 2, got {value}")
        return value

    def max_ideals(self):
        return int(self.option("limits.max_ideals", DEFAULT_MAX_IDEALS))

    def minimizer(self):
        """
        Keyword arguments for minimize_over_t from the minimizer section
        """
        spacing = self.option("minimizer.spacing")
        return {
            "spacing": float(spacing) if spacing is not None else None,
            "certify_limit": float(self.option("minimizer.certify_limit", CERTIFY_LIMIT)),
        }

    def function(self):
        """
        The function selected by f and seed, times lambda_{twist_m} N^{i twist_t}
        """
        f = builtin(self.option("f", "one"), seed=int(self.option("seed", 0)))
        twist_m = int(self.option("twist_m", 0))
        twist_t = float(self.option("twist_t", 0.0))
        if twist_m:
            f = f * AngularCharacter(twist_m)
        if twist_t:
            f = f * NormPower(twist_t)
        return f

    def sector(self):
        return Sector.from_fractions(str(self.option("theta1", "0")), str(self.option("theta2", "1/2")))

    def threads(self):
        return max(1, int(self.option("threads", 1)))


def parse_window(text):
    """
    "a..b" or a single integer as the inclusive list of integers
    """
    text = str(text).strip()
    try:
        if ".." in text:
            lo, hi = (int(part) for part in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError as exp:
        raise InvalidArgument(f"Invalid window {text!r}, expected a..b") from exp
    if lo > hi:
        raise InvalidArgument(f"Empty window {text!r}")
    return list(range(lo, hi + 1))


def checkpoints(lo, hi):
    """
    Powers of ten in [lo, hi], then hi itself if it is not one
    """
    points = [10**k for k in range(math.ceil(math.log10(lo)), math.floor(math.log10(hi)) + 1)]
    if not points or points[-1] != hi:
        points.append(hi)
    return points
