"""Exception types raised across the package."""


class InvalidPrime(ValueError):
    """The modulus base is not a prime number."""


class InvalidPrecision(ValueError):
    """Digit precision must be a positive integer."""


class NotAUnit(ValueError):
    """Inversion requested for an element divisible by p."""


class DivisionByZero(ZeroDivisionError):
    """Rational construction with a zero denominator."""


class PrimeMismatch(ValueError):
    """Two operands live over different primes."""


class InsufficientPrecision(ValueError):
    """An operation needs more stored digits than the value carries."""


class LevelMismatch(ValueError):
    """Two level functions live on different quotients Z/p^nZ."""


class CannotLower(ValueError):
    """A lift or synthesis target level is below the source level."""


class InsufficientLevel(ValueError):
    """A truncation level is too small to resolve the requested object."""


class ExactnessCapExceeded(ValueError):
    """Exact cyclotomic arithmetic requested beyond the configured size cap."""
