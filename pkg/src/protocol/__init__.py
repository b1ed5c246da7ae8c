"""Allreduce entry points over the registered round planners."""

import logging
from typing import Optional

import numpy as np

from src.exceptions.protocol import ProtocolExceptions
from src.models.blocks import make_partition
from src.models.reducer import ReductionOperator
from src.models.state import DualOrientation, ProcessState, RoundScript, make_process_state
from src.models.topology import DualTreeTopology, build_dual_trees, build_single_tree
from src.schemes.cost import CostParams
from src.schemes.report import RunReport
from src.transport.network import Fault, Network
from src.utils import AlgorithmEntry, algorithms

from .doubly import plan_doubly_round, doubly_rounds  # noqa
from .treebcast import plan_reduce_bcast_round, reduce_bcast_rounds  # noqa


logger = logging.getLogger(__name__)


def plan_round(state: ProcessState, j: int, algorithm: str = "doubly") -> RoundScript:
    return algorithms[algorithm].plan(state, j)


def is_terminated(state: ProcessState) -> bool:
    """True once every result block is final on this rank; immediately when m=0."""
    return state.final_blocks >= state.partition.b


def build_topology(algorithm: str, p: int) -> DualTreeTopology:
    if algorithms[algorithm].dual:
        return build_dual_trees(p)
    return build_single_tree(p)


def make_world(
    algorithm: str,
    inputs: list[np.ndarray],
    block_size: int,
    op: ReductionOperator,
    orientation: DualOrientation = DualOrientation.STANDARD,
) -> list[ProcessState]:
    entry = algorithms[algorithm]
    topology = build_topology(algorithm, len(inputs))
    m = len(inputs[0]) if inputs else 0
    partition = make_partition(m, max(m, 1) if entry.unpipelined else block_size)
    return [
        make_process_state(i, topology, partition, op, x, orientation)
        for i, x in enumerate(inputs)
    ]


def check_world(entry: AlgorithmEntry, world: list[ProcessState]) -> None:
    keys = {(s.topology, s.partition, s.op.name, s.y.shape) for s in world}
    if [s.rank for s in world] != list(range(world[0].topology.p)):
        keys.add("ranks")
    ProtocolExceptions.raise_exception_inconsistent_world(keys)
    ProtocolExceptions.raise_exception_wrong_topology(entry.name, entry.dual, world[0].topology.is_dual)


def run_algorithm(name: str, world: list[ProcessState], net: Network) -> tuple[list[np.ndarray], RunReport]:
    entry = algorithms[name]
    world = sorted(world, key=lambda s: s.rank)
    check_world(entry, world)
    report = net.simulate(world, entry)
    return [s.y for s in world], report


def run_doubly_pipelined(world: list[ProcessState], net: Network) -> tuple[list[np.ndarray], RunReport]:
    return run_algorithm("doubly", world, net)


def run_single_tree_doubly(world: list[ProcessState], net: Network) -> tuple[list[np.ndarray], RunReport]:
    return run_algorithm("single", world, net)


def run_pipelined_reduce_bcast(world: list[ProcessState], net: Network) -> tuple[list[np.ndarray], RunReport]:
    return run_algorithm("pipelined", world, net)


def run_naive_reduce_bcast(world: list[ProcessState], net: Network) -> tuple[list[np.ndarray], RunReport]:
    """The pipelined schedule forced to one block."""
    for state in world:
        m = state.partition.m
        if state.partition.block_size != max(m, 1):
            state.repartition(max(m, 1))
    return run_algorithm("naive", world, net)


def allreduce(
    inputs: list[np.ndarray],
    op: ReductionOperator,
    block_size: int,
    algorithm: str = "doubly",
    params: Optional[CostParams] = None,
    orientation: DualOrientation = DualOrientation.STANDARD,
    fault: Optional[Fault] = None,
    trace: bool = False,
) -> tuple[list[np.ndarray], RunReport, Network]:
    net = Network(params=params or CostParams(), trace=trace, fault=fault)
    world = make_world(algorithm, inputs, block_size, op, orientation)
    results, report = run_algorithm(algorithm, world, net)
    return results, report, net
