import pytest

from src.schemes.bench import ExperimentConfig
from src.schemes.cost import CostParams


@pytest.fixture
def config_factory(unit_cost: CostParams):
    def factory(**kwargs) -> ExperimentConfig:
        kwargs.setdefault("procs", 6)
        kwargs.setdefault("cost", unit_cost)
        return ExperimentConfig(**kwargs)

    return factory
