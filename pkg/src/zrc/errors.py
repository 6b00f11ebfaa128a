"""Exception types shared across the package."""


class ZrcError(Exception):
    """Base class for all library-specific errors."""


class PoleError(ZrcError):
    """Argument lies within the exclusion radius of a pole."""


class DomainError(ZrcError):
    """Argument outside the validity region of the requested operation."""


class PrecisionError(ZrcError):
    """The requested accuracy cannot be certified in binary64."""


class SingularityError(ZrcError):
    """An identity cannot be sampled here: a zeta argument hits the pole,
    a denominator hits a zero, or a coefficient factor is singular."""


class ParamError(ZrcError):
    """Parameters supplied to an identity do not match its arity."""


class ConfigError(ZrcError):
    """Malformed grid or tolerance configuration."""
