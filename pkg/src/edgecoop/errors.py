"""Exception hierarchy shared across the package.

The CLI maps these onto its exit-code contract: config errors exit 2,
protocol errors exit 3, numeric errors exit 4.
"""


class InputError(ValueError):
    """A caller-supplied value violates an operation's precondition."""


class ShapeError(InputError):
    """Array dimensions are incompatible with what an operation expects."""


class NumericError(RuntimeError):
    """A computation produced non-finite values."""


class StateError(RuntimeError):
    """An operation was invoked on an object in the wrong mode or state."""


class ProtocolError(RuntimeError):
    """A wire frame is malformed.

    ``offset`` is the byte position at which decoding failed, when known.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class ConfigError(ValueError):
    """A configuration file or argument string could not be interpreted."""
