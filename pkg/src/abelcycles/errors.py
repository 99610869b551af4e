"""Exception hierarchy for the abelcycles package.

Every error raised by the library derives from :class:`AbelError`, so callers
(notably the CLI) can map failures to exit codes in one place.
"""


class AbelError(Exception):
    """Base class for all abelcycles errors."""


class FieldMismatchError(AbelError):
    """Operands live in different coefficient fields (exact vs binary64)."""


class RepresentabilityError(AbelError):
    """A Laurent polynomial is not conjugate-symmetric, so it has no real
    trigonometric preimage."""


class PreconditionError(AbelError):
    """An operation's precondition is violated; the message names the
    violated invariant."""


class NotInvariantError(PreconditionError):
    """A curve that was required to be invariant is not."""


class BoundaryUndecidableError(AbelError):
    """A root lies within the decision band of the unit circle, so a
    zero-freeness certificate can neither be issued nor refuted numerically."""


class FactorizationFailedError(AbelError):
    """The re-expanded factor product does not match the input within the
    configured tolerance."""


class InconsistencyError(AbelError):
    """Internal consistency check failed; the inputs contradict an identity
    they were assumed to satisfy."""


class NotFirstIntegralError(AbelError):
    """The supplied exponents do not cancel the cofactors."""


class InconclusiveError(AbelError):
    """A numeric verification could not collect any usable samples."""


class StiffnessError(AbelError):
    """The adaptive integrator's step size underflowed away from blow-up."""
