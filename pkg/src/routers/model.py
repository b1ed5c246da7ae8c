import argparse
import csv
import sys

from src.costmodel import beta_term_ratio, optimal_blocks, optimal_blocks_reduce_bcast, tree_parameter
from src.handler import ExitCode
from src.routers.utils import cost_from, parse_counts


HEADER = [
    "h", "h_label", "m",
    "b_doubly", "time_doubly", "closed_form_doubly",
    "b_reduce_bcast", "time_reduce_bcast", "closed_form_reduce_bcast",
    "ratio",
]


def model_command(args: argparse.Namespace) -> ExitCode:
    tp = tree_parameter(args.procs)
    h = args.height or tp.h
    label = "given" if args.height else tp.label
    c = cost_from(args)

    out = open(args.csv, "w", newline="") if args.csv else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(HEADER)
        for m in parse_counts(args):
            doubly = optimal_blocks(h, m, c)
            reduce_bcast = optimal_blocks_reduce_bcast(h, m, c)
            ratio = beta_term_ratio(h, m, c) if doubly.time else 0.0
            writer.writerow([
                h, label, m,
                doubly.b, f"{doubly.time:.6f}", f"{doubly.closed_form:.6f}",
                reduce_bcast.b, f"{reduce_bcast.time:.6f}", f"{reduce_bcast.closed_form:.6f}",
                f"{ratio:.6f}",
            ])
    finally:
        if out is not sys.stdout:
            out.close()
    return ExitCode.OK


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("model", parents=[parent], help="optimal block counts and predicted times")
    parser.add_argument("--height", type=int, default=None, help="tree parameter h, derived from --procs by default")
    parser.set_defaults(handler=model_command)
