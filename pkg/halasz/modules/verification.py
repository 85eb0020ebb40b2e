"""Lemma verification Modules"""
import logging

from exceptions import ConfigException, RegressionFailure
from lemmas import SAFETY_FACTOR, calibrate, check_against, prepare_suite
from tools import CalibrationStore, Tasks

from . import Module


class LemmaModule(Module):
    """
    Shared runner for the lemma lattice
    """

    COLUMNS = ["tag", "param_hash", "measured", "bound", "ratio", "constant"]

    def store(self):
        location = self.option("calibration")
        if not location:
            raise ConfigException("--calibration (or calibration in the config file) is required")
        return CalibrationStore(location)

    async def reports(self):
        x_max = self.x_max(100_000)
        jobs = prepare_suite(x_max)
        async with Tasks(self.threads()) as tasks:
            for name, thunk in jobs:
                tasks.spawn(thunk, name=name)
            results = await tasks.gather()
        return [report for batch in results for report in batch]


class VerifyLemmasModule(LemmaModule):
    """
    Check the lemma lattice against frozen constants
    """

    OUTPUT = "verify-lemmas.csv"

    def setup_cli(self, parser):
        self.describe(
            parser,
            "Measured/bound ratios of the lemma lattice up to x-max compared with the constants in --calibration; "
            "exits with 1 when a ratio exceeds its frozen constant.",
        )

    async def handle_cli(self, args):
        store = self.store()
        verdicts = check_against(await self.reports(), store)
        self.emit([verdict.row() for verdict in verdicts])

        failures = [verdict for verdict in verdicts if not verdict.ok]
        if failures:
            raise RegressionFailure(
                f"{len(failures)} of {len(verdicts)} checks exceed their frozen constant "
                f"(first: {failures[0].report.tag} [{failures[0].report.param_hash}])"
            )
        logging.info(f"All {len(verdicts)} lemma checks within their constants")


class CalibrateModule(LemmaModule):
    """
    Freeze the lemma constants
    """

    OUTPUT = "calibrate.csv"

    def setup_cli(self, parser):
        self.describe(
            parser,
            f"Run the lemma lattice up to x-max and store {SAFETY_FACTOR:g} x the worst ratio per tag in --calibration.",
        )

    async def handle_cli(self, args):
        store = self.store()
        verdicts = calibrate(await self.reports(), store)
        store.persist()
        self.emit([verdict.row() for verdict in verdicts])
