"""Exception types shared across the package."""


class PcloseError(Exception):
    pass


class PreconditionError(PcloseError, ValueError):
    """An operation was called outside its contract (degree mismatch, H not A-invariant, ...)."""


class ResourceLimitError(PcloseError):
    """A configured size bound (oracle bound, quotient degree cap, enumeration bound) was exceeded."""


class ConsistencyError(PcloseError):
    """An internal cross-check failed; indicates an algorithm bug and is never swallowed."""


class TheoremViolation(PcloseError):
    """A computed object contradicts a claim the library verifies; carries a witness."""

    def __init__(self, claim: str, witness: dict | None = None):
        super().__init__(claim)
        self.claim = claim
        self.witness = witness or {}
