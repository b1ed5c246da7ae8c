import pytest

from src.models.topology import DualTreeTopology, build_dual_trees


@pytest.fixture
def six() -> DualTreeTopology:
    return build_dual_trees(6)
