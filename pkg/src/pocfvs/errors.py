"""Exception types shared across the package.

The CLI maps these onto process exit codes, so raising the right type
matters: bad arguments and violated preconditions are ``InvalidInputError``,
size guards are ``ResourceLimitError``, and ``ContradictionError`` is
reserved for events that cannot happen unless a structural guarantee the
library certifies at runtime fails to hold. A ``ContradictionError`` is
never a user mistake and should be reported loudly.
"""


class InvalidInputError(ValueError):
    """Malformed parameters or a violated operation precondition."""


class ResourceLimitError(RuntimeError):
    """Input exceeds a configured exhaustive-search limit."""


class ContradictionError(RuntimeError):
    """A certified structural guarantee failed at runtime."""
