"""
Deterministic lock-step simulator.

Each rank walks its own program of exchange intents, one slot per step. In
a step, a rank fires its head intent when every peer it names has the
matching intent at its own head; VOID heads fire unconditionally. Matching
is therefore per peer pair and in program order, never by global slot
index.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from src.exceptions.transport import TransportExceptions
from src.models.state import ExchangeIntent, ProcessState
from src.schemes.cost import CostParams
from src.schemes.report import RunReport
from src.transport.exchange import Endpoint, Exchange, exchange, slot_cost
from src.utils import AlgorithmEntry


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Fault:
    """Corrupt the sender's transfer_index-th non-empty payload by adding delta."""
    sender: int
    transfer_index: int
    delta: int = 1


@dataclass(frozen=True)
class Transfer:
    step: int
    sender: int
    receiver: int
    block: int
    payload: np.ndarray


def build_programs(world: list[ProcessState], algorithm: AlgorithmEntry) -> list[list[ExchangeIntent]]:
    return [
        [intent for j in range(algorithm.rounds(state)) for intent in algorithm.plan(state, j)]
        for state in world
    ]


@dataclass
class Network:
    params: CostParams = field(default_factory=CostParams)
    trace: bool = False
    fault: Optional[Fault] = None
    transfers: list[Transfer] = field(default_factory=list)

    def _corrupt(self, sender: int, payload: np.ndarray, sent: dict[int, int]) -> np.ndarray:
        if not len(payload):
            return payload
        index = sent.get(sender, 0)
        sent[sender] = index + 1
        if self.fault is None or self.fault.sender != sender or self.fault.transfer_index != index:
            return payload
        logger.warning(f"fault injected: rank {sender}, transfer {index}")
        payload.flat[0] += payload.dtype.type(self.fault.delta)
        return payload

    @staticmethod
    def _ready(heads: dict[int, ExchangeIntent]) -> set[int]:
        """Largest set of ranks whose heads are VOID or pair up with each other."""
        ready = set(heads)
        changed = True
        while changed:
            changed = False
            for i in sorted(ready):
                head = heads[i]
                if head.is_void:
                    continue
                ok = True
                if head.send_to is not None:
                    ok = head.send_to in ready and heads[head.send_to].recv_from == i
                if ok and head.recv_from is not None:
                    ok = head.recv_from in ready and heads[head.recv_from].send_to == i
                if not ok:
                    ready.discard(i)
                    changed = True
        return ready

    def simulate(self, world: list[ProcessState], algorithm: AlgorithmEntry) -> RunReport:
        programs = build_programs(world, algorithm)
        endpoints = [Endpoint(s.rank, s.topology) for s in world]
        position = [0] * len(world)
        finish_steps = [0] * len(world)
        result_steps = [0 if s.done else None for s in world]
        sent: dict[int, int] = {}
        self.transfers = []

        step = 0
        occupied = 0
        model_time = 0.0
        while True:
            heads = {i: programs[i][position[i]] for i in range(len(world)) if position[i] < len(programs[i])}
            if not heads:
                break

            ready = self._ready(heads)
            if not ready:
                pending = [f"rank {i}: {heads[i].describe()}" for i in sorted(heads)]
                logger.error(f"{algorithm.name} deadlocked after step {step}")
                TransportExceptions.raise_exception_deadlock(pending)
            step += 1

            payloads: dict[int, np.ndarray] = {}
            for i in sorted(ready):
                head = heads[i]
                if head.send_to is not None:
                    payloads[i] = self._corrupt(i, world[i].outgoing(head), sent)
                    if self.trace:
                        self.transfers.append(Transfer(step, i, head.send_to, head.send_block, payloads[i].copy()))

            exchanges = []
            for i in sorted(ready):
                head = heads[i]
                state = world[i]
                if head.is_void:
                    state.apply(head)
                    continue
                x = Exchange(
                    send_to=head.send_to,
                    recv_from=head.recv_from,
                    payload=payloads.get(i),
                    offset=state.partition.extent(head.send_block)[0] if head.send_to is not None else 0,
                    recv_capacity=state.recv_capacity(head),
                )
                inbound = payloads.get(head.recv_from) if head.recv_from is not None else None
                exchange(endpoints[i], x, inbound)
                state.apply(head, x.received)
                exchanges.append(x)

            cost = slot_cost(self.params, exchanges)
            if exchanges:
                occupied += 1
                model_time += cost
            if logger.isEnabledFor(logging.DEBUG):
                logger.debug(f"step {step}: {len(exchanges)} exchanges, ranks {sorted(ready)}, cost {cost}")

            for i in ready:
                position[i] += 1
                if position[i] == len(programs[i]):
                    finish_steps[i] = step
                if result_steps[i] is None and world[i].done:
                    result_steps[i] = step

        return self._report(world, algorithm, step, occupied, model_time, finish_steps, result_steps)

    def _report(
        self,
        world: list[ProcessState],
        algorithm: AlgorithmEntry,
        steps: int,
        occupied: int,
        model_time: float,
        finish_steps: list[int],
        result_steps: list[Optional[int]],
    ) -> RunReport:
        head = world[0]
        part = head.partition
        reductions = sum(s.reductions for s in world)
        formula = algorithm.formula(head.topology.p, part.b) if algorithm.formula else None
        done = [r if r is not None else steps for r in result_steps]

        report = RunReport(
            algorithm=algorithm.name,
            operator=head.op.name,
            p=head.topology.p,
            m=part.m,
            b=part.b,
            block_size=part.block_size,
            steps=steps,
            result_step=max(done),
            occupied_steps=occupied,
            model_time=model_time,
            gamma_cost=self.params.gamma * reductions,
            reductions=reductions,
            exchanges=sum(s.exchanges for s in world),
            elements_sent=sum(s.elements_sent for s in world),
            elements_received=sum(s.elements_received for s in world),
            rounds=[algorithm.rounds(s) for s in world],
            finish_steps=finish_steps,
            result_steps=done,
            formula_steps=formula,
            formula_offset=None if formula is None else steps - formula,
        )
        logger.info(
            f"{report.algorithm}: p={report.p} m={report.m} b={report.b} "
            f"steps={report.steps} time={report.model_time:.6f}"
        )
        return report
