"""Full-duplex exchange between two ranks."""

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from src.exceptions.transport import TransportExceptions
from src.models.topology import DualTreeTopology
from src.schemes.cost import CostParams


@dataclass
class Exchange:
    """
    One send-and-receive step of a rank. Send and receive peers may differ;
    a side without a peer moves nothing, both sides missing make a VOID slot.
    """
    send_to: Optional[int] = None
    recv_from: Optional[int] = None
    payload: Optional[np.ndarray] = None
    offset: int = 0
    recv_capacity: int = 0
    received: Optional[np.ndarray] = None

    @property
    def is_void(self) -> bool:
        return self.send_to is None and self.recv_from is None

    @property
    def sent(self) -> int:
        return 0 if self.payload is None else len(self.payload)

    @property
    def received_count(self) -> int:
        return 0 if self.received is None else len(self.received)


@dataclass(frozen=True)
class Endpoint:
    rank: int
    topology: DualTreeTopology

    def validate(self, x: Exchange) -> None:
        neighbours = self.topology.neighbours(self.rank)
        for peer in (x.send_to, x.recv_from):
            if peer is not None:
                TransportExceptions.raise_exception_peer_not_adjacent(self.rank, peer, neighbours)


def exchange(endpoint: Endpoint, x: Exchange, inbound: Optional[np.ndarray] = None) -> Exchange:
    """Complete x with the peer's payload; the actual length travels with it."""
    endpoint.validate(x)
    if x.recv_from is None:
        x.received = None
        return x
    if inbound is None:
        inbound = np.empty((0,), dtype=np.uint32)
    TransportExceptions.raise_exception_recv_capacity(endpoint.rank, x.recv_from, len(inbound), x.recv_capacity)
    x.received = inbound
    return x


def slot_cost(params: CostParams, exchanges: Iterable[Exchange]) -> float:
    """α + β·max(sent, received) over the slot's exchanges, zero when all are VOID."""
    largest = None
    for x in exchanges:
        if x.is_void:
            continue
        largest = max(largest or 0, x.sent, x.received_count)
    if largest is None:
        return 0.0
    return params.step(largest)
