"""Numerical checks of the counting and analytic lemmas"""
from .analytic import PerronResult, mean_square_dirichlet, perron_majorant, perron_truncated
from .counting import (
    brun_titchmarsh_mod4,
    lattice_count_deviation,
    mertens_ideal,
    psi_ideal,
    psi_report,
    short_interval_vm,
)
from .suite import SAFETY_FACTOR, Verdict, calibrate, check_against, lemma_jobs, prepare_suite, run_suite
