"""
Concurrent runtime: every rank runs as its own asyncio task.

Each directed rank pair owns an unbounded queue, so sends never block and a
receive awaits the peer's matching send. Results equal the lock-step
simulator's; step accounting exists only there.
"""

import asyncio
import logging
from collections import defaultdict

import numpy as np

from src.exceptions.transport import TransportExceptions
from src.models.reducer import ReductionOperator
from src.models.state import DualOrientation, ProcessState
from src.protocol import check_world, make_world
from src.transport.exchange import Endpoint, Exchange, exchange
from src.utils import AlgorithmEntry, algorithms


logger = logging.getLogger(__name__)


async def run_rank(
    state: ProcessState,
    entry: AlgorithmEntry,
    queues: dict[tuple[int, int], asyncio.Queue],
    waiting: dict[int, str],
) -> ProcessState:
    endpoint = Endpoint(state.rank, state.topology)
    for j in range(entry.rounds(state)):
        for intent in entry.plan(state, j):
            if intent.is_void:
                state.apply(intent)
                continue

            x = Exchange(send_to=intent.send_to, recv_from=intent.recv_from, recv_capacity=state.recv_capacity(intent))
            endpoint.validate(x)
            if intent.send_to is not None:
                x.payload = state.outgoing(intent)
                queues[(state.rank, intent.send_to)].put_nowait(x.payload)

            inbound = None
            if intent.recv_from is not None:
                waiting[state.rank] = intent.describe()
                inbound = await queues[(intent.recv_from, state.rank)].get()
                waiting.pop(state.rank, None)

            exchange(endpoint, x, inbound)
            state.apply(intent, x.received)
    return state


async def run_concurrent(world: list[ProcessState], algorithm: str, timeout: float = 30.0) -> list[np.ndarray]:
    entry = algorithms[algorithm]
    world = sorted(world, key=lambda s: s.rank)
    check_world(entry, world)

    queues: dict[tuple[int, int], asyncio.Queue] = defaultdict(asyncio.Queue)
    waiting: dict[int, str] = {}
    tasks = [asyncio.create_task(run_rank(s, entry, queues, waiting)) for s in world]
    try:
        await asyncio.wait_for(asyncio.gather(*tasks), timeout=timeout)
    except asyncio.TimeoutError:
        pending = [f"rank {rank}: {what}" for rank, what in sorted(waiting.items())]
        logger.error(f"{algorithm} runtime stalled with {len(pending)} ranks waiting")
        TransportExceptions.raise_exception_deadlock(pending or ["no rank progressed"])

    logger.info(f"{algorithm}: p={len(world)} finished concurrently")
    return [s.y for s in world]


async def allreduce_concurrent(
    inputs: list[np.ndarray],
    op: ReductionOperator,
    block_size: int,
    algorithm: str = "doubly",
    orientation: DualOrientation = DualOrientation.STANDARD,
    timeout: float = 30.0,
) -> list[np.ndarray]:
    world = make_world(algorithm, inputs, block_size, op, orientation)
    return await run_concurrent(world, algorithm, timeout=timeout)
