"""
Doubly pipelined dual-root schedule.

Every round j = 0..b+d of rank i (depth d) runs up to three exchanges:
with the first child, with the second child, and with the parent (or the
dual root). Partial results of block j flow up while finished blocks
j-(d+1) flow down, so one exchange per edge carries both directions.
"""

import logging

from src.costmodel import doubly_steps, single_doubly_steps
from src.exceptions.protocol import ProtocolExceptions
from src.models.reducer import Orientation
from src.models.state import DualOrientation, ExchangeIntent, ProcessState, RoundScript
from src.utils import algorithms


logger = logging.getLogger(__name__)


def doubly_rounds(state: ProcessState) -> int:
    if not state.partition.b:
        return 0
    return state.partition.b + state.depth + 1


def _dual_reduce(state: ProcessState, dual: int) -> Orientation:
    # the lower root holds the lower ranks' product, so it folds from the right
    lower = state.rank < dual
    if state.orientation == DualOrientation.SWAPPED:
        lower = not lower
    return Orientation.RIGHT if lower else Orientation.LEFT


@algorithms.register("single", dual=False, rounds=doubly_rounds, formula=single_doubly_steps)
@algorithms.register("doubly", dual=True, rounds=doubly_rounds, formula=doubly_steps)
def plan_doubly_round(state: ProcessState, j: int) -> RoundScript:
    """
    Script of round j for one rank.

    Slot 1 and 2 send the finished block Y[j-(d+1)] to a child and fold the
    child's partial block into Y[j] from the left. Slot 3 either exchanges
    Y[j] with the dual root or sends Y[j] up and receives the finished block
    Y[j-d] straight into place. The last round has no slot 3; a missing
    child gives a VOID slot.
    """
    b = state.partition.b
    d = state.depth
    node = state.node
    ProtocolExceptions.raise_exception_round_out_of_range(state.rank, j, b + d)

    intents = []
    for slot, child in ((1, node.child_first), (2, node.child_second)):
        if child is None:
            intents.append(ExchangeIntent(slot=slot, round=j))
            continue
        intents.append(ExchangeIntent(
            slot=slot,
            round=j,
            send_to=child,
            send_block=j - (d + 1),
            recv_from=child,
            reduce=Orientation.LEFT,
            reduce_block=j,
        ))

    if j < b + d:
        if node.is_root:
            dual = state.topology.dual_of(state.rank)
            finalizes = j if j < b else None
            if dual is None:
                intents.append(ExchangeIntent(slot=3, round=j, finalizes=finalizes))
            else:
                intents.append(ExchangeIntent(
                    slot=3,
                    round=j,
                    send_to=dual,
                    send_block=j,
                    recv_from=dual,
                    reduce=_dual_reduce(state, dual),
                    reduce_block=j,
                    finalizes=finalizes,
                ))
        else:
            down = j - d
            intents.append(ExchangeIntent(
                slot=3,
                round=j,
                send_to=node.parent,
                send_block=j,
                recv_from=node.parent,
                recv_block=down,
                finalizes=down if 0 <= down < b else None,
            ))

    return RoundScript(rank=state.rank, round=j, intents=tuple(intents))
