"""Harness"""
import argparse
import asyncio
import logging
import os
import sys

from exceptions import (
    CalibrationException,
    ConfigException,
    ContractViolation,
    InvalidArgument,
    PrecisionError,
    PreconditionError,
    QuadratureError,
    RegressionFailure,
    ResourceLimit,
)
from modules import FUNCTIONS
from modules.enumeration import EnumerateModule
from modules.pretentious_profile import PretentiousProfileModule
from modules.sector import SectorialModule
from modules.short_interval import ShortIntervalModule
from modules.sieve import SieveModule
from modules.sums import SumModule
from modules.verification import CalibrateModule, VerifyLemmasModule
from tools import Config

MODULES = {
    "sieve": SieveModule(),
    "enumerate": EnumerateModule(),
    "sum": SumModule(),
    "pretentious-profile": PretentiousProfileModule(),
    "sectorial": SectorialModule(),
    "short-interval": ShortIntervalModule(),
    "verify-lemmas": VerifyLemmasModule(),
    "calibrate": CalibrateModule(),
}

# exit codes
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

USAGE_ERRORS = (InvalidArgument, PreconditionError, ConfigException, CalibrationException)
DOMAIN_ERRORS = (RegressionFailure, ContractViolation, PrecisionError, ResourceLimit, QuadratureError, OSError)

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]


class Harness:
    """
    Resolves the run configuration and dispatches to a module
    """

    def __init__(self, config):
        self._config = config

    def _threads(self):
        if self._config.optional("threads") is not None:
            return
        fallback = os.getenv("GAUSS_HALASZ_THREADS")
        if fallback is None:
            return
        try:
            self._config.override({"threads": int(fallback)})
        except ValueError as exp:
            raise ConfigException(f"GAUSS_HALASZ_THREADS must be an integer, got {fallback!r}") from exp

    async def run(self, args):
        self._threads()
        threads = self._config.optional("threads", 1)
        if int(threads) < 1:
            raise InvalidArgument(f"threads must be at least 1, got {threads}")

        for module in MODULES.values():
            module.initialize(self._config)

        logging.info(f"Running {args.command} on {threads} worker(s)")
        await args.handler(args)


def common_flags():
    """
    Flags shared by every subcommand; None means "not given" so file values survive
    """
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--config", help="YAML run configuration; flags override its values")
    parser.add_argument("--threads", type=int, help="worker count (fallback: GAUSS_HALASZ_THREADS, then 1)")
    parser.add_argument("--log-level", dest="log_level", choices=LOG_LEVELS)
    parser.add_argument("--output", help="CSV path")
    parser.add_argument("--f", dest="f", choices=FUNCTIONS, help="multiplicative function")
    parser.add_argument("--seed", type=int, help="seed of the random functions")
    parser.add_argument("--twist-m", dest="twist_m", type=int, help="multiply f by lambda_m")
    parser.add_argument("--twist-t", dest="twist_t", type=float, help="multiply f by N^{it}")
    parser.add_argument("--x-max", dest="x_max", type=int)
    parser.add_argument("--theta1", help="sector start as a rational multiple of pi, e.g. 0")
    parser.add_argument("--theta2", help="sector end as a rational multiple of pi, e.g. 1/4")
    parser.add_argument("--T", dest="T", type=int, help="Fourier truncation")
    parser.add_argument("--h", dest="h", type=int, help="short interval length")
    parser.add_argument("--m", dest="m_window", help="window of angular frequencies a..b")
    parser.add_argument("--calibration", help="frozen constants file")
    return parser


def build_parser():
    parser = argparse.ArgumentParser(prog="halasz", description="Mean values of multiplicative functions on Z[i]")
    common = common_flags()

    # module specific CLI interfaces
    subparsers = parser.add_subparsers(dest="command")
    for name, module in MODULES.items():
        subparser = subparsers.add_parser(name, parents=[common])
        subparser.set_defaults(handler=module.handle_cli)
        module.setup_cli(subparser)
    return parser


def attach_windows(argv):
    """
    Rewrite "--m -4..4" as "--m=-4..4"; argparse takes a leading minus for a flag
    """
    argv = list(argv)
    joined = []
    while argv:
        token = argv.pop(0)
        if token == "--m" and argv and argv[0].startswith("-"):
            token = f"--m={argv.pop(0)}"
        joined.append(token)
    return joined


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(attach_windows(sys.argv[1:] if argv is None else argv))
    except SystemExit as exp:
        return exp.code

    if args.command is None:
        parser.print_help()
        return EXIT_USAGE

    values = {key: value for key, value in vars(args).items() if key not in ("config", "command", "handler")}
    try:
        config = Config(args.config) if args.config else Config(config={})
        config.override(values)
    except (OSError, ValueError, ConfigException) as exp:
        logging.error(f"Invalid configuration: {exp}")
        return EXIT_USAGE

    logging.basicConfig(format="%(asctime)s %(levelname)s %(message)s")
    level = str(config.optional("log_level", "INFO")).upper()
    if level not in LOG_LEVELS:
        logging.error(f"Invalid log level {level}, expected one of {LOG_LEVELS}")
        return EXIT_USAGE
    logging.getLogger().setLevel(level)

    loop = asyncio.new_event_loop()
    try:
        loop.run_until_complete(Harness(config).run(args))
    except USAGE_ERRORS as exp:
        logging.error(f"{args.command}: {exp}")
        return EXIT_USAGE
    except DOMAIN_ERRORS as exp:
        logging.error(f"{args.command} failed: {exp}")
        return EXIT_FAILURE
    finally:
        loop.close()
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
