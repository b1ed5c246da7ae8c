"""Cost model exceptions."""

from src.exceptions.base import InvalidArgumentError
from src.exceptions.constants.costmodel import HEIGHT_TOO_SMALL, BLOCKS_EXCEED_ELEMENTS, NEGATIVE_COST, NEGATIVE_ELEMENTS


class CostModelExceptions:
    """Cost model exceptions class."""
    @staticmethod
    def raise_exception_height_too_small(h: int, least: int = 2) -> bool:
        if h < least:
            raise InvalidArgumentError(name=HEIGHT_TOO_SMALL.with_detail(f"h={h}, need h >= {least}"))
        return True

    @staticmethod
    def raise_exception_blocks_exceed_elements(m: int, b: int) -> bool:
        if b < 1 or (m > 0 and b > m):
            raise InvalidArgumentError(name=BLOCKS_EXCEED_ELEMENTS.with_detail(f"m={m}, b={b}"))
        return True

    @staticmethod
    def raise_exception_negative_cost(alpha: float, beta: float) -> bool:
        if alpha < 0 or beta < 0:
            raise InvalidArgumentError(name=NEGATIVE_COST.with_detail(f"alpha={alpha}, beta={beta}"))
        return True

    @staticmethod
    def raise_exception_negative_elements(m: int) -> bool:
        if m < 0:
            raise InvalidArgumentError(name=NEGATIVE_ELEMENTS.with_detail(f"m={m}"))
        return True
