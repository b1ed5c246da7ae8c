"""An error message schema."""

from pydantic import BaseModel, Field, ConfigDict


class ErrorMessage(BaseModel):
    """
    Standard schema for error reports.

    - `message`: Descriptive text explaining the error.
    - `code_error`: Identifier for the error type, used for programmatic handling.

    Examples:
    - invalid argument: `{"message": "Process count must be at least 1", "code_error": "ProcsNotPositive"}`
    - protocol: `{"message": "Received block length differs from the local block: rank 3, block 2", "code_error": "BlockLengthMismatch"}`
    """
    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "examples": [
                {
                    "message": "Process count must be at least 1",
                    "code_error": "ProcsNotPositive",
                },
                {
                    "message": "Schedule deadlock, pending intents: ...",
                    "code_error": "ScheduleDeadlock"
                },
            ],
        }
    )

    message: str = Field(
        ...,
        description="human readable error text",
        examples=[
            "Process count must be at least 1",
            "Unknown reduction operator",
        ]
    )
    code_error: str = Field(
        ...,
        description="stable error identifier",
        examples=[
            "ProcsNotPositive",
            "UnknownOperator",
        ]
    )

    def with_detail(self, detail: str) -> "ErrorMessage":
        """Copy of the message with a diagnostic suffix."""
        return self.model_copy(update={"message": f"{self.message}: {detail}"})
