"""Exception types raised across the package.

Every error derives from :class:`TpcKitError` so callers (and the CLI) can
catch the whole family in one place.
"""


class TpcKitError(Exception):
    """Base class for all package errors."""


class DepthZero(TpcKitError, ValueError):
    pass


class NoConvergence(TpcKitError):
    pass


class IncomposableWord(TpcKitError, ValueError):
    pass


class TruncationExhausted(TpcKitError):
    """Generation needed a tensor entry that the truncated table does not know."""


class AmbiguousTruncation(TpcKitError):
    """A nonzero weight space whose verdict could change under skipped constraints."""

    def __init__(self, message, *, dimension=None, skipped=()):
        super().__init__(message)
        self.dimension = dimension
        self.skipped = tuple(skipped)


class NoExtension(TpcKitError):
    pass


class InconsistentWeight(TpcKitError):
    pass


class MissingWeight(TpcKitError, ValueError):
    pass


class NonPositiveScalar(TpcKitError, ValueError):
    pass


class NotAWeight(TpcKitError):
    pass


class TheoremViolation(TpcKitError):
    """Hypotheses of the fusion-closure theorem hold but the conclusion fails."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class InvariantViolation(TpcKitError):
    """An internal cross-check failed; indicates corrupt input or a bug."""


class NotAGroup(TpcKitError, ValueError):
    pass


class NotASubgroup(TpcKitError, ValueError):
    pass


class SchemaError(TpcKitError):
    pass


class ValidationError(TpcKitError):
    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class CapacityError(TpcKitError):
    """Input exceeds the desk-scale limits."""


class GraphError(TpcKitError, ValueError):
    pass
