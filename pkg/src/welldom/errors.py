"""Exception types shared across the package."""


class WelldomError(Exception):
    """Base class for all errors raised by this package."""


class InputError(WelldomError, ValueError):
    """A caller-supplied value is malformed or out of range."""


class PreconditionError(InputError):
    """A documented precondition of an operation does not hold."""


class CapacityError(WelldomError):
    """A size limit was exceeded (vertex capacity, isomorphism cap, graph6 short form)."""


class Graph6ParseError(WelldomError, ValueError):
    """A graph6 record is malformed.  ``offset`` is the byte position of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class InternalError(WelldomError, RuntimeError):
    """An impossibility occurred: a search that is guaranteed to succeed came up empty."""
