"""Pretentious distances and Halasz parameters"""
from .bounds import HalaszParams, check_euler_pretentious_bound, halasz_M, halasz_rhs
from .distance import (
    DistanceQuery,
    MinimizerResult,
    distance_profile,
    distance_sq,
    minimize_over_t,
    pretentious_profile,
)
from .euler import EulerProduct, EulerValue, euler_F
