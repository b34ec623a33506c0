class HcalgError(Exception):
    """Base class for library errors."""


class UnsupportedType(HcalgError, ValueError):
    pass


class DimensionMismatch(HcalgError, ValueError):
    pass


class NotDivisible(HcalgError, ArithmeticError):
    pass


class JacobiFailure(HcalgError):
    pass


class OrbitMissingMultiplicity(HcalgError, KeyError):
    pass


class ParameterMismatch(HcalgError, ValueError):
    pass


class NotDominantIntegral(HcalgError, ValueError):
    pass


class DimensionCapExceeded(HcalgError):
    pass


class DegreeCapExceeded(HcalgError):
    pass


class NonIntegralMultiplicity(HcalgError):
    pass


class WeightNotZero(HcalgError, ValueError):
    pass


class UnknownSuite(HcalgError, KeyError):
    pass
