import pytest

from src.models.state import ExchangeIntent, RoundScript
from src.utils import AlgorithmEntry, algorithms


@pytest.fixture
def stalled(monkeypatch) -> str:
    """A schedule where both ranks of p=2 wait for a block nobody sends."""
    def plan(state, j):
        return RoundScript(state.rank, j, (ExchangeIntent(slot=1, round=j, recv_from=1 - state.rank),))

    entry = AlgorithmEntry(name="stalled", dual=True, plan=plan, rounds=lambda state: 1)
    monkeypatch.setitem(algorithms.__dict__, "stalled", entry)
    return "stalled"
