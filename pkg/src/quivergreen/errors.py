"""Exception types shared across the package."""


class QuiverError(ValueError):
    """Invalid quiver data or an operation applied outside its domain."""


class CapabilityError(RuntimeError):
    """Input is structurally valid but beyond the supported problem size."""


class CertificateError(ValueError):
    """A certificate failed verification or is structurally malformed."""


class InternalInvariantError(AssertionError):
    """A mathematical invariant the implementation relies on was violated.

    Raising this signals an implementation bug, not bad user input.
    """
