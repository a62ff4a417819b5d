"""Exception types shared across the package."""


class UnsupportedArityError(ValueError):
    """Raised for arities the recursive constructions do not cover (k < 3)."""


class CapacityError(RuntimeError):
    """Raised when a construction or enumeration would exceed its configured cap."""


class NotUniquelyDecodableError(ValueError):
    """Raised when an operation requires a UD code and the input is not one."""


class DecodingError(ValueError):
    """Raised when a sum word has no preimage, or does not fit a construction trace."""


class MembershipError(ValueError):
    """Raised when a codeword is not a member of the constituent it is sent on."""
