"""
Reduce-then-broadcast over one post-order tree.

Rounds 0..b stream partial blocks towards the root, rounds b+1..2b+1 stream
finished blocks back down. Each round has two sendrecv slots whose send and
receive peers may differ; transfers of blocks outside [0, b) are dropped.
"""

from typing import Optional

from src.costmodel import reduce_bcast_steps
from src.exceptions.protocol import ProtocolExceptions
from src.models.reducer import Orientation
from src.models.state import ExchangeIntent, ProcessState, RoundScript
from src.utils import algorithms


def reduce_bcast_rounds(state: ProcessState) -> int:
    if not state.partition.b:
        return 0
    return 2 * (state.partition.b + 1)


def _intent(
    slot: int,
    j: int,
    send_to: Optional[int] = None,
    send_block: Optional[int] = None,
    recv_from: Optional[int] = None,
    **kwargs,
) -> ExchangeIntent:
    if send_to is None:
        send_block = None
    if recv_from is None:
        kwargs = {k: v for k, v in kwargs.items() if k == "finalizes"}
    return ExchangeIntent(slot=slot, round=j, send_to=send_to, send_block=send_block, recv_from=recv_from, **kwargs)


@algorithms.register("naive", dual=False, rounds=reduce_bcast_rounds, formula=reduce_bcast_steps, unpipelined=True)
@algorithms.register("pipelined", dual=False, rounds=reduce_bcast_rounds, formula=reduce_bcast_steps)
def plan_reduce_bcast_round(state: ProcessState, j: int) -> RoundScript:
    b = state.partition.b
    node = state.node
    ProtocolExceptions.raise_exception_round_out_of_range(state.rank, j, 2 * b + 1)

    def live(k: int) -> bool:
        return 0 <= k < b

    parent = None if node.is_root else node.parent
    if j <= b:
        first = node.child_first if live(j) else None
        second = node.child_second if live(j) else None
        intents = (
            _intent(
                1, j,
                send_to=parent if live(j - 1) else None,
                send_block=j - 1,
                recv_from=first,
                reduce=Orientation.LEFT,
                reduce_block=j,
            ),
            _intent(
                2, j,
                recv_from=second,
                reduce=Orientation.LEFT,
                reduce_block=j,
                finalizes=j if node.is_root and live(j) else None,
            ),
        )
    else:
        k = j - (b + 1)
        intents = (
            _intent(
                1, j,
                send_to=node.child_second if live(k - 1) else None,
                send_block=k - 1,
                recv_from=parent if live(k) else None,
                recv_block=k,
                finalizes=k if parent is not None and live(k) else None,
            ),
            _intent(
                2, j,
                send_to=node.child_first if live(k) else None,
                send_block=k,
            ),
        )
    return RoundScript(rank=state.rank, round=j, intents=intents)
