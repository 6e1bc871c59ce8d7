"""Exception types shared across the toolkit."""


class WeylkitError(Exception):
    """Base class for all toolkit errors."""


class ModeMismatch(WeylkitError):
    """Mixed arithmetic between Q and Q(q) scalars."""


class UndefinedVariable(WeylkitError):
    """An endomorphism or polynomial references a variable unknown to the ring."""


class NotAnAutomorphism(WeylkitError):
    """Supplied images/inverse images do not compose to the identity."""


class RelationNotPreserved(WeylkitError):
    """An endomorphism does not map the defining ideal into itself."""


class WindowExceeded(WeylkitError):
    """A localized computation stepped outside the materialized index window."""


class NotSigmaStable(WeylkitError):
    """An Ore family is not stable (up to unit) under the ring automorphism."""


class DegreeBoundTooSmall(WeylkitError):
    """Quotient classification could not be settled at the given degree bound."""


class NotFiniteOrder(WeylkitError):
    """The automorphism is not of finite order, as required by the separable path."""


class ResourceBudgetExceeded(WeylkitError):
    """Chain basis enumeration exceeded the configured cap."""


class DimensionCap(WeylkitError):
    """A finite-dimensional algebra exceeds the brute-force dimension cap."""


class HasRelations(WeylkitError):
    """Closed-form oracle requested for a ring that is not free."""


class ValidationFailed(WeylkitError):
    """A proposed invariant model disagrees with the windowed computation."""
