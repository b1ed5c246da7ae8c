"""Flags shared by the sub-commands and their translation into an ExperimentConfig."""

import argparse
from pathlib import Path
from typing import Optional

from settings import settings
from src.bench.sweep import exponential_counts
from src.exceptions.bench import BenchExceptions
from src.models.reducer import Operators
from src.schemes.bench import ExperimentConfig
from src.schemes.cost import CostParams
from src.utils import algorithms


def common_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--procs", type=int, default=settings.procs, help="number of simulated processes")
    counts = parser.add_mutually_exclusive_group()
    counts.add_argument("--elements", type=str, default=None, help="comma separated element counts")
    counts.add_argument("--sweep", type=str, default=None, help="exponential sweep bounds lo:hi")
    blocks = parser.add_mutually_exclusive_group()
    blocks.add_argument("--block-size", type=int, default=None, help="pipeline block size in elements")
    blocks.add_argument("--blocks", type=int, default=None, help="pipeline block count, size derived per count")
    parser.add_argument("--alg", type=str, default="doubly,pipelined,naive", help=f"comma separated, any of {','.join(algorithms.names())}")
    parser.add_argument("--op", type=str, default=settings.operator, help="|".join(Operators.values()))
    parser.add_argument("--alpha", type=float, default=None)
    parser.add_argument("--beta", type=float, default=None)
    parser.add_argument("--gamma", type=float, default=None)
    parser.add_argument("--reps", type=int, default=settings.reps, help="repetitions, the minimum is kept")
    parser.add_argument("--csv", type=Path, default=None, help="write the table here instead of stdout")
    parser.add_argument("--seed", type=int, default=settings.seed, help="seed of the random exact inputs")
    parser.add_argument("--inject-fault", type=str, default=None, metavar="SENDER:INDEX")
    return parser


def parse_counts(args: argparse.Namespace, fallback: Optional[list[int]] = None) -> list[int]:
    if args.elements is not None:
        return sorted(int(v) for v in args.elements.split(",") if v.strip())
    if args.sweep is None and fallback is not None:
        return fallback
    lo, hi = BenchExceptions.raise_exception_bad_sweep(args.sweep or settings.sweep)
    return exponential_counts(lo, hi)


def cost_from(args: argparse.Namespace) -> CostParams:
    overrides = {k: getattr(args, k) for k in ("alpha", "beta", "gamma") if getattr(args, k) is not None}
    return CostParams(**overrides)


def config_from(args: argparse.Namespace, fallback: Optional[list[int]] = None) -> ExperimentConfig:
    fault = None
    if args.inject_fault:
        fault = BenchExceptions.raise_exception_bad_fault(args.inject_fault)
        BenchExceptions.raise_exception_fault_sender(fault[0], args.procs)
    return ExperimentConfig(
        procs=args.procs,
        counts=parse_counts(args, fallback),
        block_size=args.block_size,
        blocks=args.blocks,
        operator=args.op,
        algorithms=args.alg,
        cost=cost_from(args),
        reps=args.reps,
        csv=args.csv,
        seed=args.seed,
        fault=fault,
    )
