"""Reduction operator exceptions."""

from typing import Iterable, Optional

import numpy as np

from src.exceptions.base import InvalidArgumentError, ProtocolError
from src.exceptions.constants.protocol import BLOCK_LENGTH_MISMATCH
from src.exceptions.constants.reducer import UNKNOWN_OPERATOR, INPUT_LENGTH_MISMATCH, NO_INPUTS


class ReducerExceptions:
    """Reduction operator exceptions class."""
    @staticmethod
    def raise_exception_unknown_operator(name: str, known: Iterable[str]) -> bool:
        """Raise exception if the operator is not registered."""
        known = sorted(known)
        if name not in known:
            raise InvalidArgumentError(name=UNKNOWN_OPERATOR.with_detail(f"{name!r}, expected one of {', '.join(known)}"))
        return True

    @staticmethod
    def raise_exception_block_length_mismatch(received: int, local: int, where: Optional[str] = None) -> bool:
        if received != local:
            detail = f"received {received}, local {local}"
            if where:
                detail = f"{where}, {detail}"
            raise ProtocolError(name=BLOCK_LENGTH_MISMATCH.with_detail(detail))
        return True

    @staticmethod
    def raise_exception_bad_inputs(inputs: list[np.ndarray]) -> bool:
        if not inputs:
            raise InvalidArgumentError(name=NO_INPUTS)
        shapes = {x.shape for x in inputs}
        if len(shapes) > 1:
            raise InvalidArgumentError(name=INPUT_LENGTH_MISMATCH.with_detail(f"shapes {sorted(shapes)}"))
        return True
