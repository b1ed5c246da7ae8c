""" Reduction operator constants """
from src.exceptions.schemas import ErrorMessage


UNKNOWN_OPERATOR = ErrorMessage(
    message="Unknown reduction operator",
    code_error="UnknownOperator"
)
INPUT_LENGTH_MISMATCH = ErrorMessage(
    message="Input vectors differ in length",
    code_error="InputLengthMismatch"
)
NO_INPUTS = ErrorMessage(
    message="At least one input vector is required",
    code_error="NoInputs"
)
