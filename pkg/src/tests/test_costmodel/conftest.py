import itertools

import pytest

from src.schemes.cost import CostParams


CONSTANTS = [0.1, 1.0, 10.0]


@pytest.fixture(params=list(itertools.product(CONSTANTS, CONSTANTS)), ids=lambda ab: f"a{ab[0]}-b{ab[1]}")
def cost_grid(request) -> CostParams:
    alpha, beta = request.param
    return CostParams(alpha=alpha, beta=beta, gamma=0.0)
