""" Topology constants """
from src.exceptions.schemas import ErrorMessage


PROCS_NOT_POSITIVE = ErrorMessage(
    message="Process count must be at least 1",
    code_error="ProcsNotPositive"
)
RANK_OUT_OF_RANGE = ErrorMessage(
    message="Rank is outside the communicator",
    code_error="RankOutOfRange"
)
