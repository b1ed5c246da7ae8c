import argparse

from src.bench.verify import verify
from src.handler import ExitCode
from src.routers.utils import config_from


DEFAULT_COUNTS = [0, 1, 5, 24, 1000]


def verify_command(args: argparse.Namespace) -> ExitCode:
    outcome = verify(config_from(args, fallback=DEFAULT_COUNTS))
    for result in outcome:
        print(result.describe())
        if args.report:
            print(result.report.to_text(), end="")
    failed = sum(1 for r in outcome if not r.passed)
    print(f"{len(outcome) - failed}/{len(outcome)} passed")
    return ExitCode.VERIFICATION_FAILED if failed else ExitCode.OK


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("verify", parents=[parent], help="compare every algorithm against the sequential fold")
    parser.add_argument("--report", action="store_true", help="also print each run's report block")
    parser.set_defaults(handler=verify_command)
