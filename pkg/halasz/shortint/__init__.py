"""Short-interval statistics of angular modes"""
from .l2 import L2Report, ShortIntervalConfig, l2_statistic, l2_unrestricted, mean_square, window_sums
from .modes import H1Coverage, H1Result, compress_mode, h1_check, h1_coverage, h_factor, twist, twisted_long_sum
