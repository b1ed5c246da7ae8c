""" Protocol constants """
from src.exceptions.schemas import ErrorMessage


BLOCK_LENGTH_MISMATCH = ErrorMessage(
    message="Received block length differs from the local block",
    code_error="BlockLengthMismatch"
)
ROUND_OUT_OF_RANGE = ErrorMessage(
    message="Round index is outside the loop range",
    code_error="RoundOutOfRange"
)
WRONG_TOPOLOGY = ErrorMessage(
    message="Topology does not fit the algorithm",
    code_error="WrongTopology"
)
INCONSISTENT_WORLD = ErrorMessage(
    message="Process states disagree on topology, partition or operator",
    code_error="InconsistentWorld"
)
UNKNOWN_ALGORITHM = ErrorMessage(
    message="Unknown allreduce algorithm",
    code_error="UnknownAlgorithm"
)
