"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: domain errors exit 1, input errors
exit 2 and resource errors exit 3.
"""


class QuandleError(Exception):
    """Base class for every error raised by quandlekit."""

    exit_code = 1
    kind = "error"


class InputError(QuandleError, ValueError):
    """Malformed or out-of-range input."""

    exit_code = 2
    kind = "input"


class ClosureError(InputError):
    """A carrier that should be closed under conjugation is not."""

    kind = "closure"


class DomainError(QuandleError, ValueError):
    """Well-formed input outside the domain of an operation."""

    exit_code = 1
    kind = "domain"


class ConsistencyError(QuandleError, AssertionError):
    """An internal invariant failed; indicates a bug or a non-quandle table."""

    exit_code = 1
    kind = "consistency"


class ResourceError(QuandleError, RuntimeError):
    """A configured size or search cap was exceeded."""

    exit_code = 3
    kind = "resource"
