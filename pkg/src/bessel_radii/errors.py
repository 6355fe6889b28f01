"""Exception hierarchy shared by all modules."""


class BesselRadiiError(Exception):
    """Base class for all package errors."""


class DomainCapExceeded(BesselRadiiError):
    """Series evaluation requested outside the trusted |z| range."""


class NonConvergence(BesselRadiiError):
    """Series did not meet the relative tolerance within max_terms."""


class ZeroArgument(BesselRadiiError):
    """Operation undefined (or divergent) at z = 0 for this order."""


class ScanExhausted(BesselRadiiError):
    """Sign-change scan hit its x limit before finding enough zeros."""


class InvalidOrder(BesselRadiiError):
    """Order nu outside the admissible range for the requested family."""


class OutOfInterval(BesselRadiiError):
    """Radius argument outside the open interval (0, cap)."""


class NearPole(BesselRadiiError):
    """A ratio denominator fell below the pole-guard threshold."""


class BracketFailure(BesselRadiiError):
    """Root bracket shows no sign change; signals an evaluation bug."""


class PreconditionViolated(BesselRadiiError):
    """Explicit argument precondition violated."""


class CapExceeded(BesselRadiiError):
    """Requested verification circle lies at or beyond the domain cap."""
