"""
Closed-form α-β predictions for the tree allreduce schedules.

Both schedules cost (L + k·b)(α + βm/b) for b blocks of m/b elements:
the doubly pipelined one has L = 4h-6, k = 3, reduce-then-broadcast over
one tree has L = 4h-4, k = 4. Here h is the tree parameter with
p = 2^h-2 processes in the dual-tree case.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional

from src.exceptions.costmodel import CostModelExceptions
from src.schemes.cost import CostParams


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TreeParameter:
    h: int
    """False when p has no perfect shape and h is rounded up"""
    exact: bool

    @property
    def label(self) -> str:
        return "exact" if self.exact else "upper-bound"


@dataclass(frozen=True)
class OptimalBlocks:
    b: int
    time: float
    continuous_b: float
    continuous_time: float
    closed_form: float
    """'alpha' or 'beta' when that constant is zero and b sits on a boundary"""
    degenerate: Optional[str] = None


def tree_parameter(p: int) -> TreeParameter:
    """h with p = 2^h-2 for dual trees, else ceil(log2(p+2))."""
    h = (p + 1).bit_length()
    return TreeParameter(h=h, exact=(1 << h) == p + 2)


def single_tree_parameter(p: int) -> TreeParameter:
    """h with p = 2^h-1 for one tree, else ceil(log2(p+1))."""
    h = p.bit_length()
    return TreeParameter(h=h, exact=(1 << h) == p + 1)


def doubly_step_count(h: int, b: int) -> int:
    return 4 * h - 3 + 3 * (b - 1)


def reduce_bcast_step_count(h: int, b: int) -> int:
    return 2 * (2 * h + 2 * (b - 1))


def single_doubly_step_count(h: int, b: int) -> int:
    return 4 * h + 3 * (b - 1)


def _exact_steps(shape: Callable[[int], TreeParameter], count: Callable[[int, int], int]):
    def steps(p: int, b: int) -> Optional[int]:
        tp = shape(p)
        if not tp.exact or b < 1:
            return None
        return count(tp.h, b)

    return steps


doubly_steps = _exact_steps(tree_parameter, doubly_step_count)
reduce_bcast_steps = _exact_steps(single_tree_parameter, reduce_bcast_step_count)
single_doubly_steps = _exact_steps(single_tree_parameter, single_doubly_step_count)


def _check(b: int, m: int, c: CostParams) -> None:
    CostModelExceptions.raise_exception_negative_elements(m)
    CostModelExceptions.raise_exception_negative_cost(c.alpha, c.beta)
    CostModelExceptions.raise_exception_blocks_exceed_elements(m, b)


def predict_doubly(h: int, b: int, m: int, c: CostParams) -> float:
    CostModelExceptions.raise_exception_height_too_small(h, 1)
    _check(b, m, c)
    return doubly_step_count(h, b) * (c.alpha + c.beta * m / b)


def predict_reduce_bcast(h: int, b: int, m: int, c: CostParams) -> float:
    CostModelExceptions.raise_exception_height_too_small(h, 1)
    _check(b, m, c)
    return reduce_bcast_step_count(h, b) * (c.alpha + c.beta * m / b)


def closed_form_time(latency: int, per_block: int, m: int, c: CostParams) -> float:
    return latency * c.alpha + 2 * math.sqrt(per_block * latency * c.alpha * c.beta * m) + per_block * c.beta * m


def _optimize(
    latency: int,
    per_block: int,
    m: int,
    c: CostParams,
    predict: Callable[[int], float],
) -> OptimalBlocks:
    CostModelExceptions.raise_exception_negative_elements(m)
    CostModelExceptions.raise_exception_negative_cost(c.alpha, c.beta)
    top = max(m, 1)
    closed = closed_form_time(latency, per_block, m, c)

    if c.beta == 0 or c.alpha == 0:
        b = 1 if c.beta == 0 else top
        t = predict(b)
        return OptimalBlocks(b, t, float(b), t, closed, degenerate="beta" if c.beta == 0 else "alpha")

    b_c = math.sqrt(latency * c.beta * m / (per_block * c.alpha))
    low = min(max(math.floor(b_c), 1), top)
    high = min(max(math.ceil(b_c), 1), top)
    b = low
    if high != low and predict(high) < predict(low):
        b = high

    continuous = (latency + per_block * b_c) * (c.alpha + c.beta * m / b_c) if b_c > 0 else closed
    return OptimalBlocks(b, predict(b), b_c, continuous, closed)


def optimal_blocks(h: int, m: int, c: CostParams) -> OptimalBlocks:
    """Integer block count minimizing predict_doubly, the better of floor/ceil of the continuous optimum."""
    CostModelExceptions.raise_exception_height_too_small(h, 2)
    return _optimize(4 * h - 6, 3, m, c, lambda b: predict_doubly(h, b, m, c))


def optimal_blocks_reduce_bcast(h: int, m: int, c: CostParams) -> OptimalBlocks:
    CostModelExceptions.raise_exception_height_too_small(h, 1)
    return _optimize(4 * h - 4, 4, m, c, lambda b: predict_reduce_bcast(h, b, m, c))


def reduction_overhead_per_round(gamma: float, m: int, b: int) -> float:
    """At most three ⊙ applications on a block of m/b elements per round."""
    CostModelExceptions.raise_exception_blocks_exceed_elements(m, b)
    return 3 * gamma * m / b


def beta_term_ratio(h: int, m: int, c: CostParams) -> float:
    """Reduce-then-broadcast over doubly pipelined time, each at its own optimal b."""
    doubly = optimal_blocks(h, m, c)
    reduce_bcast = optimal_blocks_reduce_bcast(h, m, c)
    logger.debug(f"h={h} m={m}: b*={doubly.b} vs {reduce_bcast.b}")
    return reduce_bcast.time / doubly.time
