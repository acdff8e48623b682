# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Exceptions and constants for standardizing script exit.

Every console command exits with one of four codes:

    0   everything verified or the command succeeded
    1   a check was refuted
    2   invalid input: parse error or bad parameter
    3   resource limit reached or a check was inconclusive
"""

import sys

from contalg.support.log import log

SUCCESS_EXIT_CODE = 0
REFUTED_EXIT_CODE = 1
USAGE_EXIT_CODE = 2
LIMIT_EXIT_CODE = 3


class InvalidParameterError(Exception):
    """Custom exception for parameters a constructor or operation cannot accept."""

    def __init__(self, msg: str) -> None:
        """Add error code and indicate custom exception then propagate."""
        self.code = USAGE_EXIT_CODE
        self.contalg = True
        super().__init__(msg)


class ResourceLimitError(Exception):
    """Custom exception raised when a configured cap would be exceeded."""

    def __init__(self, what: str, size: int, cap: int) -> None:
        """Add error code and indicate custom exception then propagate."""
        self.code = LIMIT_EXIT_CODE
        self.contalg = True
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what} of {size:,} exceeds the cap of {cap:,}")


class ConsistencyError(Exception):
    """Custom exception raised when a proved invariant fails at runtime."""

    def __init__(self, msg: str) -> None:
        """Add error code and indicate custom exception then propagate."""
        self.code = REFUTED_EXIT_CODE
        self.contalg = True
        super().__init__(msg)


def exit_on_exception(e: Exception) -> None:
    """Log exceptions in a standard way and exit with the exception error code.

    Exceptions with the contalg attribute are specific to this package and carry the exit code
    that is returned.  All other exceptions are unexpected, they are logged with the traceback
    and return the resource limit code so the exit code stays in the documented set.

    Args:
      e (exception): The fatal exception that was raised
    """
    if not hasattr(e, "contalg"):
        e.code = LIMIT_EXIT_CODE
        log.header(f" FATAL ERROR : {e.code}", indent=False)
        log.exception("Unknown error.  Send developer details below and debug.log\n\n")
    else:
        log.header(f"FATAL ERROR : {e.code}", indent=False)
        log.error(f" {e}")

    sys.exit(e.code)
