"""Transport exceptions."""

from typing import Iterable

from src.exceptions.base import DeadlockError, ProtocolError
from src.exceptions.constants.transport import PEER_NOT_ADJACENT, RECV_CAPACITY_EXCEEDED, SCHEDULE_DEADLOCK


class TransportExceptions:
    """Transport exceptions class."""
    @staticmethod
    def raise_exception_peer_not_adjacent(rank: int, peer: int, neighbours: frozenset[int]) -> bool:
        """Raise exception if a rank addresses a process it has no tree edge to."""
        if peer not in neighbours:
            raise ProtocolError(name=PEER_NOT_ADJACENT.with_detail(f"rank {rank} -> {peer}"))
        return True

    @staticmethod
    def raise_exception_recv_capacity(rank: int, peer: int, received: int, capacity: int) -> bool:
        if received > capacity:
            raise ProtocolError(
                name=RECV_CAPACITY_EXCEEDED.with_detail(f"rank {rank} from {peer}, {received} > {capacity}")
            )
        return True

    @staticmethod
    def raise_exception_deadlock(pending: Iterable[str]) -> bool:
        pending = list(pending)
        if pending:
            raise DeadlockError(name=SCHEDULE_DEADLOCK.with_detail("; ".join(pending)))
        return True
