"""Exception types shared across the package."""


class InputError(ValueError):
    """A precondition on user-supplied input was violated."""


class VerificationError(Exception):
    """A colouring or result failed verification."""
