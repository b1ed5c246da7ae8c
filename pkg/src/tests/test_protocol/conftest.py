import numpy as np
import pytest

from src.models.blocks import make_partition
from src.models.reducer import ReductionOperator, get_operator
from src.models.state import ProcessState, make_process_state
from src.models.topology import build_dual_trees


SPAN_BROKEN = np.uint32(0xFFFFFFFF)


def _span(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """(lo, hi) rank intervals; joining non-adjacent intervals poisons the result."""
    ok = (a[:, 0] != SPAN_BROKEN) & (b[:, 0] != SPAN_BROKEN) & (a[:, 1] + np.uint32(1) == b[:, 0])
    out = np.empty_like(a)
    out[:, 0] = np.where(ok, a[:, 0], SPAN_BROKEN)
    out[:, 1] = np.where(ok, b[:, 1], SPAN_BROKEN)
    return out


@pytest.fixture(scope="session")
def span_op() -> ReductionOperator:
    return ReductionOperator("span", 2, np.uint32, False, True, _span)


def span_inputs(p: int, m: int) -> list[np.ndarray]:
    return [np.full((m, 2), i, dtype=np.uint32) for i in range(p)]


@pytest.fixture
def state_factory():
    def factory(p: int, rank: int, m: int, block_size: int) -> ProcessState:
        op = get_operator("sum")
        topology = build_dual_trees(p)
        return make_process_state(rank, topology, make_partition(m, block_size), op, np.zeros(m, dtype=np.uint32))

    return factory
