""" Cost model constants """
from src.exceptions.schemas import ErrorMessage


HEIGHT_TOO_SMALL = ErrorMessage(
    message="Tree parameter h is too small for this formula",
    code_error="HeightTooSmall"
)
BLOCKS_EXCEED_ELEMENTS = ErrorMessage(
    message="More blocks than elements would leave blocks empty",
    code_error="BlocksExceedElements"
)
NEGATIVE_COST = ErrorMessage(
    message="Cost constants must not be negative",
    code_error="NegativeCost"
)
NEGATIVE_ELEMENTS = ErrorMessage(
    message="Element count must not be negative",
    code_error="NegativeElements"
)
