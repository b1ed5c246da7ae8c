"""Topology exceptions."""

from src.exceptions.base import InvalidArgumentError
from src.exceptions.constants.topology import PROCS_NOT_POSITIVE, RANK_OUT_OF_RANGE


class TopologyExceptions:
    """Topology exceptions class."""
    @staticmethod
    def raise_exception_procs_not_positive(p: int) -> bool:
        """Raise exception if the communicator is empty."""
        if p < 1:
            raise InvalidArgumentError(name=PROCS_NOT_POSITIVE.with_detail(f"p={p}"))
        return True

    @staticmethod
    def raise_exception_rank_out_of_range(p: int, rank: int) -> bool:
        """Raise exception if rank is not in 0..p-1."""
        if not 0 <= rank < p:
            raise InvalidArgumentError(name=RANK_OUT_OF_RANGE.with_detail(f"rank={rank}, p={p}"))
        return True
