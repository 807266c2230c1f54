"""Exception types shared across the package.

The CLI maps :class:`InputError` to exit status 2 and
:class:`ResourceLimitError` to exit status 3.
"""


class RaagcatError(Exception):
    """Base class for all errors raised by raagcat."""


class InputError(RaagcatError, ValueError):
    """Malformed or inadmissible input (bad file, non-flag complex, unknown vertex...)."""


class ResourceLimitError(RaagcatError):
    """A configured budget (simplex count, entry bit-length, oracle size) was exceeded."""

    def __init__(self, message: str, budget: int | None = None):
        super().__init__(message)
        self.budget = budget
