"""Protocol exceptions."""

from typing import Iterable

from src.exceptions.base import InvalidArgumentError, ProtocolError
from src.exceptions.constants.protocol import (
    ROUND_OUT_OF_RANGE, WRONG_TOPOLOGY, INCONSISTENT_WORLD, UNKNOWN_ALGORITHM,
)


class ProtocolExceptions:
    """Protocol exceptions class."""
    @staticmethod
    def raise_exception_round_out_of_range(rank: int, j: int, last: int) -> bool:
        """Raise exception if a planner is asked for a round the loop never runs."""
        if not 0 <= j <= last:
            raise ProtocolError(name=ROUND_OUT_OF_RANGE.with_detail(f"rank {rank}, round {j}, last {last}"))
        return True

    @staticmethod
    def raise_exception_wrong_topology(algorithm: str, wants_dual: bool, is_dual: bool) -> bool:
        if wants_dual != is_dual:
            shape = "dual trees" if wants_dual else "a single tree"
            raise InvalidArgumentError(name=WRONG_TOPOLOGY.with_detail(f"{algorithm} runs on {shape}"))
        return True

    @staticmethod
    def raise_exception_inconsistent_world(keys: set) -> bool:
        if len(keys) > 1:
            raise ProtocolError(name=INCONSISTENT_WORLD.with_detail(f"{len(keys)} distinct settings"))
        return True

    @staticmethod
    def raise_exception_unknown_algorithm(name: str, known: Iterable[str]) -> bool:
        known = sorted(known)
        if name not in known:
            raise InvalidArgumentError(name=UNKNOWN_ALGORITHM.with_detail(f"{name!r}, expected one of {', '.join(known)}"))
        return True
