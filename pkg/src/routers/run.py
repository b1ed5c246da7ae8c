import argparse
import sys

from src.bench.sweep import run_sweep
from src.handler import ExitCode
from src.routers.utils import config_from


def run_command(args: argparse.Namespace) -> ExitCode:
    cfg = config_from(args)
    text = run_sweep(cfg)
    if cfg.csv is None:
        sys.stdout.write(text)
    if any(line.rsplit(",", 1)[-1] == "FAIL" for line in text.splitlines()[1:]):
        return ExitCode.VERIFICATION_FAILED
    return ExitCode.OK


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("run", parents=[parent], help="sweep element counts and print the CSV table")
    parser.set_defaults(handler=run_command)
