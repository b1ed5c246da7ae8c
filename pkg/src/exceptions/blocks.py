"""Block partition exceptions."""

from src.exceptions.base import InvalidArgumentError
from src.exceptions.constants.blocks import (
    BLOCK_SIZE_NOT_POSITIVE, BLOCK_COUNT_NOT_POSITIVE, ELEMENTS_NEGATIVE,
)


class BlockExceptions:
    """Block partition exceptions class."""
    @staticmethod
    def raise_exception_bad_partition(m: int, block_size: int) -> bool:
        if m < 0:
            raise InvalidArgumentError(name=ELEMENTS_NEGATIVE.with_detail(f"m={m}"))
        if block_size < 1:
            raise InvalidArgumentError(name=BLOCK_SIZE_NOT_POSITIVE.with_detail(f"B={block_size}"))
        return True

    @staticmethod
    def raise_exception_block_count_not_positive(b: int) -> bool:
        if b < 1:
            raise InvalidArgumentError(name=BLOCK_COUNT_NOT_POSITIVE.with_detail(f"b={b}"))
        return True
