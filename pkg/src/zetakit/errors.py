"""Exception types shared across the package."""


class ZetakitError(Exception):
    pass


class PoleError(ZetakitError):
    """Evaluation requested at a pole of the function."""


class PrecisionError(ZetakitError):
    """Requested accuracy cannot be certified with the given parameters."""


class NearZeroError(ZetakitError):
    """Log-derivative requested too close to a zero of the function."""


class NotFundamentalError(ZetakitError, ValueError):
    """Integer is not a fundamental discriminant."""


class ClosureError(ZetakitError, ValueError):
    """Character set is not closed under multiplication/conjugation."""


class ResourceLimitError(ZetakitError):
    """Computation exceeds the configured desk-scale limits."""


class UnresolvedRegionError(ZetakitError):
    """Zero search could not separate or certify a region."""


class UnverifiedZerosError(ZetakitError):
    """Operation requires a count-verified zero list."""


class CacheError(ZetakitError):
    """Zero cache file is malformed or inconsistent."""
