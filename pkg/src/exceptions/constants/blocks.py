""" Block partition constants """
from src.exceptions.schemas import ErrorMessage


BLOCK_SIZE_NOT_POSITIVE = ErrorMessage(
    message="Block size must be at least 1 element",
    code_error="BlockSizeNotPositive"
)
BLOCK_COUNT_NOT_POSITIVE = ErrorMessage(
    message="Block count must be at least 1",
    code_error="BlockCountNotPositive"
)
ELEMENTS_NEGATIVE = ErrorMessage(
    message="Element count must not be negative",
    code_error="ElementsNegative"
)
