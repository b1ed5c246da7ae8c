"""Exception handlers."""

import logging
import sys

from pydantic import ValidationError

from src.exceptions.base import (
    BaseAppError,
    ConfigurationError,
    DeadlockError,
    InvalidArgumentError,
    ProtocolError,
)
from src.exceptions.schemas import ErrorMessage
from src.utils.datastructure import MultiValueIntEnum


log = logging.getLogger(__name__)


class ExitCode(MultiValueIntEnum):
    OK = 0, "ok"
    VERIFICATION_FAILED = 1, "verification failed"
    INVALID_ARGUMENT = 2, "invalid argument"
    PROTOCOL = 3, "protocol corruption"
    DEADLOCK = 4, "schedule deadlock"
    CONFIGURATION = 5, "configuration"


EXIT_CODES: dict[type[BaseAppError], ExitCode] = {
    InvalidArgumentError: ExitCode.INVALID_ARGUMENT,
    ProtocolError: ExitCode.PROTOCOL,
    DeadlockError: ExitCode.DEADLOCK,
    ConfigurationError: ExitCode.CONFIGURATION,
}


def handle_exception(exc: Exception) -> ExitCode:
    """Print the error message JSON on stderr and pick the exit code."""
    if isinstance(exc, ValidationError):
        error = exc.errors()[0]
        name = ErrorMessage(
            message=f"{'.'.join(str(v) for v in error['loc'])}: {error['msg']}",
            code_error="ValidationError",
        )
        code = ExitCode.CONFIGURATION
    elif isinstance(exc, BaseAppError):
        name = exc.name if isinstance(exc.name, ErrorMessage) else ErrorMessage(message=exc.name, code_error=type(exc).__name__)
        code = next((c for kind, c in EXIT_CODES.items() if isinstance(exc, kind)), ExitCode.INVALID_ARGUMENT)
    else:
        raise exc

    log.error(f"{code.label}: {name.message}")
    print(name.model_dump_json(), file=sys.stderr)
    return code
