"""Exception types shared across the library."""


class NotInvertibleError(ArithmeticError):
    """Division by an integer that the field characteristic divides."""


class NotIdempotentError(ValueError):
    """An alleged idempotent fails e∘e = e."""


class PreconditionError(ValueError):
    """A stated precondition of an operation does not hold."""


class LawViolationError(RuntimeError):
    """A freshly constructed witness failed its own laws.

    This signals an implementation bug and is never silenced.
    """


class NonInvertibleComponentError(ValueError):
    """A component that must be invertible has no two-sided inverse."""


class NotFullyFaithfulError(ValueError):
    """A hom-space map that must be bijective is not."""


class MonadNotSeparableError(ValueError):
    """No section of the multiplication exists for the monad at hand."""


class WorkspaceError(ValueError):
    """Malformed workspace file or unresolvable reference."""
