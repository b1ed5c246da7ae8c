from dataclasses import dataclass
from typing import Callable, Optional

from src.exceptions.protocol import ProtocolExceptions


@dataclass(frozen=True)
class AlgorithmEntry:
    """
    A registered allreduce schedule.

    `plan(state, j)` returns the round script of round j, `rounds(state)` the
    loop length of that rank, `formula(p, b)` the exact completion step when p
    has the perfect shape for the algorithm (None otherwise).
    """
    name: str
    dual: bool
    plan: Callable
    rounds: Callable
    formula: Optional[Callable[[int, int], Optional[int]]] = None
    unpipelined: bool = False


class AlgorithmRegister:
    """
    register round planners for the simulator and the runtime
    """
    __slots__ = ('__dict__',)

    def register(
        self,
        name: str,
        *,
        dual: bool,
        rounds: Callable,
        formula: Optional[Callable[[int, int], Optional[int]]] = None,
        unpipelined: bool = False,
    ):
        def wrapper(func):
            self.__dict__[name] = AlgorithmEntry(
                name=name,
                dual=dual,
                plan=func,
                rounds=rounds,
                formula=formula,
                unpipelined=unpipelined,
            )
            return func

        return wrapper

    def __contains__(self, item):
        return item in self.__dict__.keys()

    def __getitem__(self, item: str) -> AlgorithmEntry:
        ProtocolExceptions.raise_exception_unknown_algorithm(item, self.__dict__.keys())
        return self.__dict__[item]

    def names(self) -> list[str]:
        return list(self.__dict__.keys())


algorithms = AlgorithmRegister()
