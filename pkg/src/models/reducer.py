"""Associative element-wise reduction operators and the sequential oracle."""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np

from src.exceptions.reducer import ReducerExceptions
from src.utils.datastructure import MultiValueStrEnum


class Orientation(str, Enum):
    """LEFT: y := t ⊙ y, RIGHT: y := y ⊙ t."""
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class ReductionOperator:
    """
    Element-wise operator over vectors shaped (elements, width).

    `combine(a, b)` returns a ⊙ b for equal-length blocks. `exact` operators
    are associative bit for bit and safe for oracle comparisons.
    """
    name: str
    width: int
    dtype: type
    commutative: bool
    exact: bool
    combine: Callable[[np.ndarray, np.ndarray], np.ndarray]

    def empty(self, m: int) -> np.ndarray:
        return np.zeros((m, self.width), dtype=self.dtype)

    def random_inputs(self, p: int, m: int, seed: int = 0) -> list[np.ndarray]:
        rng = np.random.default_rng(seed)
        if self.exact:
            data = rng.integers(0, 2 ** 32, size=(p, m, self.width), dtype=np.uint32)
        else:
            data = rng.standard_normal(size=(p, m, self.width))
        return [data[i].astype(self.dtype, copy=True) for i in range(p)]


def _sum(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a + b


def _max(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.maximum(a, b)


def _affine(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # (a1, b1) ⊙ (a2, b2) applies x -> a1*x + b1 first, then x -> a2*x + b2
    out = np.empty_like(a)
    out[:, 0] = b[:, 0] * a[:, 0]
    out[:, 1] = b[:, 0] * a[:, 1] + b[:, 1]
    return out


def _mat2(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # row-major [[x0, x1], [x2, x3]]
    out = np.empty_like(a)
    out[:, 0] = a[:, 0] * b[:, 0] + a[:, 1] * b[:, 2]
    out[:, 1] = a[:, 0] * b[:, 1] + a[:, 1] * b[:, 3]
    out[:, 2] = a[:, 2] * b[:, 0] + a[:, 3] * b[:, 2]
    out[:, 3] = a[:, 2] * b[:, 1] + a[:, 3] * b[:, 3]
    return out


class Operators(MultiValueStrEnum):
    SUM = "sum", ReductionOperator("sum", 1, np.uint32, True, True, _sum)
    MAX = "max", ReductionOperator("max", 1, np.uint32, True, True, _max)
    AFFINE = "affine", ReductionOperator("affine", 2, np.uint32, False, True, _affine)
    MAT2 = "mat2", ReductionOperator("mat2", 4, np.uint32, False, True, _mat2)
    FSUM = "fsum", ReductionOperator("fsum", 1, np.float64, True, False, _sum)


def get_operator(name: str) -> ReductionOperator:
    ReducerExceptions.raise_exception_unknown_operator(name, Operators.values())
    return Operators(name).label


def reduce_block_into(
    op: ReductionOperator,
    t: np.ndarray,
    y: np.ndarray,
    orientation: Orientation = Orientation.LEFT,
    where: Optional[str] = None,
) -> np.ndarray:
    """Reduce t into the block view y in place."""
    ReducerExceptions.raise_exception_block_length_mismatch(len(t), len(y), where)
    if not len(y):
        return y
    if orientation == Orientation.LEFT:
        y[...] = op.combine(t, y)
    else:
        y[...] = op.combine(y, t)
    return y


def sequential_fold_oracle(op: ReductionOperator, inputs: list[np.ndarray]) -> np.ndarray:
    """Strict left-to-right fold in rank order, x_0 ⊙ x_1 ⊙ ... ⊙ x_{p-1}."""
    ReducerExceptions.raise_exception_bad_inputs(inputs)
    result = inputs[0].copy()
    for x in inputs[1:]:
        result = op.combine(result, x)
    return result
