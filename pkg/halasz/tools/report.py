"""Measured-versus-bound reports"""
import hashlib
import math
from dataclasses import dataclass, field

from exceptions import InvalidArgument

from .csvout import format_value

REPORT_COLUMNS = ["tag", "param_hash", "measured", "bound", "ratio", "constant"]


@dataclass(frozen=True)
class BoundReport:
    """
    One measured quantity next to the shape of the bound it should respect
    """

    tag: str
    params: dict
    measured: float
    bound: float
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if not (math.isfinite(self.bound) and self.bound > 0):
            raise InvalidArgument(f"{self.tag}: bound must be positive and finite, got {self.bound}")
        if not math.isfinite(self.measured):
            raise InvalidArgument(f"{self.tag}: measured value is not finite")

    @property
    def ratio(self):
        return self.measured / self.bound

    @property
    def param_hash(self):
        """
        Stable short hash of the parameters, the key of calibration records
        """
        text = ";".join(f"{key}={format_value(self.params[key])}" for key in sorted(self.params))
        return hashlib.sha1(f"{self.tag}|{text}".encode("utf-8")).hexdigest()[:12]

    def row(self, constant=math.nan):
        return {
            "tag": self.tag,
            "param_hash": self.param_hash,
            "measured": self.measured,
            "bound": self.bound,
            "ratio": self.ratio,
            "constant": constant,
        }
