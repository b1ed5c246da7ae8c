import numpy as np
import pytest

from src.models.reducer import ReductionOperator, get_operator
from src.schemes.cost import CostParams


@pytest.fixture(scope="session")
def unit_cost() -> CostParams:
    """α = β = 1 so model time reads as steps plus elements."""
    return CostParams(alpha=1.0, beta=1.0, gamma=0.0)


@pytest.fixture(scope="session")
def sum_op() -> ReductionOperator:
    return get_operator("sum")


@pytest.fixture(scope="session")
def affine_op() -> ReductionOperator:
    return get_operator("affine")


@pytest.fixture(scope="session")
def mat2_op() -> ReductionOperator:
    return get_operator("mat2")


def assert_all_equal(results: list[np.ndarray], expected: np.ndarray) -> None:
    for rank, y in enumerate(results):
        assert np.array_equal(y, expected), f"rank {rank} differs"
