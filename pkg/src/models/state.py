"""Per-rank protocol state and the exchange intents planners emit."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional

import numpy as np

from src.models.blocks import BlockPartition, make_partition
from src.models.reducer import Orientation, ReductionOperator, reduce_block_into
from src.models.topology import DualTreeTopology, TreeNode
from src.exceptions.reducer import ReducerExceptions


class DualOrientation(str, Enum):
    """Which dual root folds the received block from the left."""
    STANDARD = "standard"
    SWAPPED = "swapped"


@dataclass(frozen=True)
class ExchangeIntent:
    """
    One slot of a rank's loop.

    `recv_block` None means the payload lands in the temporary buffer and is
    then folded into `reduce_block`; otherwise it is written straight into
    that result block. An intent with neither peer is VOID.
    """
    slot: int
    round: int
    send_to: Optional[int] = None
    send_block: Optional[int] = None
    recv_from: Optional[int] = None
    recv_block: Optional[int] = None
    reduce: Optional[Orientation] = None
    reduce_block: Optional[int] = None
    finalizes: Optional[int] = None

    @property
    def is_void(self) -> bool:
        return self.send_to is None and self.recv_from is None

    def describe(self) -> str:
        if self.is_void:
            return f"round {self.round} slot {self.slot} VOID"
        parts = [f"round {self.round} slot {self.slot}"]
        if self.send_to is not None:
            parts.append(f"send Y[{self.send_block}] to {self.send_to}")
        if self.recv_from is not None:
            target = "t" if self.recv_block is None else f"Y[{self.recv_block}]"
            parts.append(f"recv {target} from {self.recv_from}")
        return " ".join(parts)


@dataclass(frozen=True)
class RoundScript:
    rank: int
    round: int
    intents: tuple[ExchangeIntent, ...]

    def __iter__(self) -> Iterator[ExchangeIntent]:
        return iter(self.intents)

    def __len__(self) -> int:
        return len(self.intents)

    @property
    def exchanges(self) -> int:
        return sum(1 for x in self.intents if not x.is_void)


@dataclass
class ProcessState:
    """One rank's loop state: result array y, temp buffer t and counters."""
    rank: int
    topology: DualTreeTopology
    partition: BlockPartition
    op: ReductionOperator
    y: np.ndarray
    orientation: DualOrientation = DualOrientation.STANDARD
    t: np.ndarray = field(init=False, repr=False)
    round: int = 0
    done: bool = False
    exchanges: int = 0
    elements_sent: int = 0
    elements_received: int = 0
    reductions: int = 0
    final_blocks: int = 0

    def __post_init__(self) -> None:
        self.t = np.zeros((self.partition.block_size, self.op.width), dtype=self.op.dtype)

    @property
    def node(self) -> TreeNode:
        return self.topology.node(self.rank)

    @property
    def depth(self) -> int:
        return self.node.depth

    def block(self, j: int) -> np.ndarray:
        return self.y[self.partition.slice(j)]

    def repartition(self, block_size: int) -> None:
        self.partition = make_partition(self.partition.m, block_size)
        self.t = np.zeros((block_size, self.op.width), dtype=self.op.dtype)

    def recv_capacity(self, intent: ExchangeIntent) -> int:
        if intent.recv_block is None:
            return len(self.t)
        return self.partition.length(intent.recv_block)

    def outgoing(self, intent: ExchangeIntent) -> np.ndarray:
        payload = self.block(intent.send_block).copy()
        self.elements_sent += len(payload)
        return payload

    def apply(self, intent: ExchangeIntent, received: Optional[np.ndarray] = None) -> None:
        """Land the received payload, fold it if asked, and advance the round."""
        self.round = intent.round
        if not intent.is_void:
            self.exchanges += 1

        if received is not None:
            n = len(received)
            self.elements_received += n
            if intent.recv_block is None:
                self.t[:n] = received
                if intent.reduce is not None:
                    target = self.block(intent.reduce_block)
                    reduce_block_into(
                        self.op, self.t[:n], target, intent.reduce,
                        where=f"rank {self.rank}, block {intent.reduce_block}",
                    )
                    self.reductions += len(target)
            else:
                target = self.block(intent.recv_block)
                ReducerExceptions.raise_exception_block_length_mismatch(
                    n, len(target), where=f"rank {self.rank}, block {intent.recv_block}",
                )
                target[...] = received

        if intent.finalizes is not None:
            self.final_blocks += 1
            self.done = self.final_blocks >= self.partition.b


def make_process_state(
    rank: int,
    topology: DualTreeTopology,
    partition: BlockPartition,
    op: ReductionOperator,
    x: np.ndarray,
    orientation: DualOrientation = DualOrientation.STANDARD,
) -> ProcessState:
    """Copy x_i into a fresh state; y starts as the rank's input."""
    topology.node(rank)
    y = np.array(x, dtype=op.dtype, copy=True).reshape(partition.m, op.width)
    return ProcessState(
        rank=rank,
        topology=topology,
        partition=partition,
        op=op,
        y=y,
        orientation=orientation,
        done=partition.b == 0,
    )
