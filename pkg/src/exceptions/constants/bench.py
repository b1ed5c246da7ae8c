""" Experiment constants """
from src.exceptions.schemas import ErrorMessage


BAD_SWEEP = ErrorMessage(
    message="Sweep bounds must look like lo:hi with 0 <= lo <= hi",
    code_error="BadSweep"
)
BAD_FAULT = ErrorMessage(
    message="Fault must look like SENDER:INDEX",
    code_error="BadFault"
)
EMPTY_ALGORITHMS = ErrorMessage(
    message="At least one algorithm must be selected",
    code_error="EmptyAlgorithms"
)
FAULT_SENDER_OUT_OF_RANGE = ErrorMessage(
    message="Fault sender is not a rank of the world",
    code_error="FaultSenderOutOfRange"
)
