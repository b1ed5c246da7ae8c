"""Base app error."""

from typing import Union

from src.exceptions.schemas import ErrorMessage


class BaseAppError(Exception):
    """Base app error class."""
    def __init__(
        self: object,
        name: Union[ErrorMessage, str],
    ) -> None:
        """Initialize a new base app error class."""
        super().__init__(name.message if isinstance(name, ErrorMessage) else name)
        self.name = name


class InvalidArgumentError(BaseAppError):
    """Invalid argument error class."""


class ProtocolError(BaseAppError):
    """Protocol corruption error class."""


class DeadlockError(BaseAppError):
    """Schedule deadlock error class."""


class ConfigurationError(BaseAppError):
    """Experiment configuration error class."""
