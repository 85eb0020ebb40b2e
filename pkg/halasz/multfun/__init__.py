"""Multiplicative functions on ideals"""
from .algebra import (
    LambdaCheck,
    check_lambda_bound,
    convolve,
    d_kappa,
    divisor_sum_identity,
    gh_decompose,
    h_tail,
    lambda_f,
    smooth_rough_split,
)
from .compress import CompressedFn, norm_compress
from .function import (
    AngularCharacter,
    MultFn,
    NormPower,
    ProductFn,
    builtin,
    divisor_function,
    evaluate,
    liouville,
    mobius,
    one,
    prime_hash,
    random_multiplicative,
)
from .sums import (
    FULL_SECTOR,
    Sector,
    fsum_complex,
    interval_sum,
    partial_sum,
    sector_interval_sum,
    sector_sum,
    table_for,
)
