""" Transport constants """
from src.exceptions.schemas import ErrorMessage


PEER_NOT_ADJACENT = ErrorMessage(
    message="Exchange peer is not a parent, child or dual of the rank",
    code_error="PeerNotAdjacent"
)
RECV_CAPACITY_EXCEEDED = ErrorMessage(
    message="Received more elements than the receive buffer holds",
    code_error="RecvCapacityExceeded"
)
SCHEDULE_DEADLOCK = ErrorMessage(
    message="Schedule deadlock, pending intents",
    code_error="ScheduleDeadlock"
)
