"""Element-count sweeps shaped like the benchmark's comparison table."""

import csv
import io
import logging
from typing import Optional

import numpy as np

from src.costmodel import optimal_blocks, predict_doubly, predict_reduce_bcast, tree_parameter
from src.models.reducer import ReductionOperator, get_operator, sequential_fold_oracle
from src.protocol import allreduce
from src.schemes.bench import ExperimentConfig
from src.schemes.report import RunReport
from src.transport.network import Fault


logger = logging.getLogger(__name__)

ALGORITHM_ORDER = ("naive", "pipelined", "doubly", "single")
SUB_POINTS = (10, 35, 60, 85)


def exponential_counts(lo: int, hi: int) -> list[int]:
    """0, 1, then 25·10^k·f/100 for f in 10, 35, 60, 85 per decade, clipped to [lo, hi]."""
    points = [0, 1]
    decade = 1
    while True:
        grown = [25 * decade * f // 100 for f in SUB_POINTS]
        points.extend(grown)
        if grown[-1] >= hi:
            break
        decade *= 10
    counts = sorted({c for c in points if lo <= c <= hi})
    if not counts or counts[-1] != hi:
        counts.append(hi)
    return counts


def ordered_algorithms(names: list[str]) -> list[str]:
    known = [a for a in ALGORITHM_ORDER if a in names]
    return known + [a for a in names if a not in known]


def run_cell(
    algorithm: str,
    inputs: list[np.ndarray],
    op: ReductionOperator,
    block_size: int,
    cfg: ExperimentConfig,
) -> tuple[list[np.ndarray], RunReport]:
    """Minimum model time over cfg.reps identical runs."""
    fault = Fault(*cfg.fault) if cfg.fault else None
    best: Optional[tuple[list[np.ndarray], RunReport]] = None
    for _ in range(cfg.reps):
        results, report, _net = allreduce(
            inputs, op, block_size, algorithm=algorithm, params=cfg.cost, fault=fault,
        )
        if best is None or report.model_time < best[1].model_time:
            best = results, report
    return best


def matches_oracle(results: list[np.ndarray], expected: np.ndarray) -> bool:
    return all(np.array_equal(y, expected) for y in results)


def sweep_header(algorithms: list[str]) -> list[str]:
    return [
        "count", "blocks", "block_size", "h", "native_model_estimate",
        *algorithms,
        "predicted_doubly", "predicted_reduce_bcast", "ratio", "status",
    ]


def _fmt(value: Optional[float]) -> str:
    return "-" if value is None else f"{value:.6f}"


def sweep_row(cfg: ExperimentConfig, m: int, algorithms: list[str], op: ReductionOperator) -> list[str]:
    block_size = cfg.block_size_for(m)
    b = -(-m // block_size)
    tp = tree_parameter(cfg.procs)
    inputs = op.random_inputs(cfg.procs, m, cfg.seed)
    expected = sequential_fold_oracle(op, inputs)

    times: dict[str, float] = {}
    status = "OK" if op.exact else "UNVERIFIED"
    for name in algorithms:
        results, report = run_cell(name, inputs, op, block_size, cfg)
        times[name] = report.model_time
        if op.exact and not matches_oracle(results, expected):
            logger.error(f"{name} differs from the sequential fold at m={m}")
            status = "FAIL"

    predicted_doubly = predict_doubly(tp.h, b, m, cfg.cost) if b else 0.0
    predicted_reduce_bcast = predict_reduce_bcast(tp.h, b, m, cfg.cost) if b else 0.0
    ratio = None
    if times.get("doubly") and "pipelined" in times:
        ratio = times["pipelined"] / times["doubly"]

    return [
        str(m), str(b), str(block_size), f"{tp.h}:{tp.label}",
        _fmt(optimal_blocks(tp.h, m, cfg.cost).closed_form),
        *(_fmt(times[name]) for name in algorithms),
        _fmt(predicted_doubly), _fmt(predicted_reduce_bcast), _fmt(ratio), status,
    ]


def run_sweep(cfg: ExperimentConfig) -> str:
    """One CSV row per count; written to cfg.csv when set, always returned."""
    op = get_operator(cfg.operator)
    algorithms = ordered_algorithms(cfg.algorithms)

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(sweep_header(algorithms))
    for m in cfg.counts:
        writer.writerow(sweep_row(cfg, m, algorithms, op))

    text = buffer.getvalue()
    if cfg.csv is not None:
        cfg.csv.write_text(text)
        logger.info(f"sweep written to {cfg.csv}")
    return text
