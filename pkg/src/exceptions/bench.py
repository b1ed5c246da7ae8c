"""Experiment configuration exceptions."""

from src.exceptions.base import ConfigurationError
from src.exceptions.constants.bench import BAD_SWEEP, BAD_FAULT, EMPTY_ALGORITHMS, FAULT_SENDER_OUT_OF_RANGE


class BenchExceptions:
    """Experiment configuration exceptions class."""
    @staticmethod
    def raise_exception_bad_sweep(raw: str) -> tuple[int, int]:
        """Parse lo:hi or raise."""
        try:
            lo, hi = (int(v) for v in raw.split(":"))
        except ValueError:
            raise ConfigurationError(name=BAD_SWEEP.with_detail(repr(raw)))
        if not 0 <= lo <= hi:
            raise ConfigurationError(name=BAD_SWEEP.with_detail(repr(raw)))
        return lo, hi

    @staticmethod
    def raise_exception_bad_fault(raw: str) -> tuple[int, int]:
        try:
            sender, index = (int(v) for v in raw.split(":"))
        except ValueError:
            raise ConfigurationError(name=BAD_FAULT.with_detail(repr(raw)))
        if sender < 0 or index < 0:
            raise ConfigurationError(name=BAD_FAULT.with_detail(repr(raw)))
        return sender, index

    @staticmethod
    def raise_exception_fault_sender(sender: int, procs: int) -> bool:
        if sender >= procs:
            raise ConfigurationError(name=FAULT_SENDER_OUT_OF_RANGE.with_detail(f"sender {sender}, procs {procs}"))
        return True

    @staticmethod
    def raise_exception_empty_algorithms(algorithms: list[str]) -> bool:
        if not algorithms:
            raise ConfigurationError(name=EMPTY_ALGORITHMS)
        return True
