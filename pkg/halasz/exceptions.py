"""Gauss-Halasz Exceptions"""


class InvalidArgument(Exception):  # pylint: disable=missing-class-docstring
    pass


class PreconditionError(Exception):  # pylint: disable=missing-class-docstring
    pass


class ContractViolation(Exception):  # pylint: disable=missing-class-docstring
    pass


class PrecisionError(Exception):  # pylint: disable=missing-class-docstring
    pass


class ResourceLimit(Exception):  # pylint: disable=missing-class-docstring
    pass


class QuadratureError(Exception):  # pylint: disable=missing-class-docstring
    pass


class ConfigException(Exception):  # pylint: disable=missing-class-docstring
    pass


class CalibrationException(Exception):  # pylint: disable=missing-class-docstring
    pass


class RegressionFailure(Exception):  # pylint: disable=missing-class-docstring
    pass
