"""Oracle comparison of every configured algorithm."""

import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from src.models.reducer import get_operator, sequential_fold_oracle
from src.models.state import DualOrientation
from src.protocol import allreduce
from src.schemes.bench import ExperimentConfig
from src.schemes.report import RunReport
from src.transport.network import Fault


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Mismatch:
    algorithm: str
    rank: int
    block: int


@dataclass
class VerifyResult:
    algorithm: str
    m: int
    block_size: int
    report: RunReport
    mismatches: list[Mismatch] = field(default_factory=list)
    exact: bool = True

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def describe(self) -> str:
        head = f"{self.algorithm} p={self.report.p} m={self.m} B={self.block_size} b={self.report.b}"
        if not self.exact:
            return f"SKIP {head} (inexact operator)"
        if self.passed:
            return f"PASS {head}"
        lines = [f"FAIL {head}"]
        lines.extend(f"  rank {x.rank}: block {x.block} differs" for x in self.mismatches)
        return "\n".join(lines)


def find_mismatches(
    algorithm: str,
    results: list[np.ndarray],
    expected: np.ndarray,
    block_size: int,
) -> list[Mismatch]:
    """First differing block per rank."""
    found = []
    for rank, y in enumerate(results):
        rows = np.nonzero(np.any(y != expected, axis=1))[0]
        if len(rows):
            found.append(Mismatch(algorithm=algorithm, rank=rank, block=int(rows[0]) // block_size))
    return found


def block_sizes(cfg: ExperimentConfig, m: int) -> list[int]:
    if cfg.block_size is None and cfg.blocks is None:
        return sorted({1, 3, max(m, 1)})
    return [cfg.block_size_for(m)]


def verify(cfg: ExperimentConfig, orientation: DualOrientation = DualOrientation.STANDARD) -> list[VerifyResult]:
    op = get_operator(cfg.operator)
    fault = Fault(*cfg.fault) if cfg.fault else None
    outcome = []
    for m in cfg.counts:
        inputs = op.random_inputs(cfg.procs, m, cfg.seed)
        expected = sequential_fold_oracle(op, inputs)
        for block_size in block_sizes(cfg, m):
            for name in cfg.algorithms:
                results, report, _net = allreduce(
                    inputs, op, block_size,
                    algorithm=name, params=cfg.cost, orientation=orientation, fault=fault,
                )
                mismatches = find_mismatches(name, results, expected, report.block_size) if op.exact else []
                result = VerifyResult(name, m, block_size, report, mismatches, op.exact)
                if not result.passed:
                    logger.error(result.describe())
                outcome.append(result)
    return outcome


def first_failure(outcome: list[VerifyResult]) -> Optional[Mismatch]:
    for result in outcome:
        if result.mismatches:
            return result.mismatches[0]
    return None
