import argparse
import logging
import sys
from typing import Optional

from settings import settings
from src.handler import ExitCode, handle_exception
from src.routers import init_routers


logging.basicConfig(level=logging.INFO)
log = logging.getLogger("ALLREDUCE")

console_handler = logging.StreamHandler()
console_handler.setLevel(logging.INFO)
if settings.debug:
    console_handler.setLevel(logging.DEBUG)
    logging.getLogger().setLevel(logging.DEBUG)
formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
console_handler.setFormatter(formatter)
log.addHandler(console_handler)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="allreduce-sim",
        description="Simulate and verify pipelined tree allreduce schedules.",
    )
    init_routers(parser)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    log.debug(f"{args.command}: {vars(args)}")
    try:
        code = args.handler(args)
    except Exception as exc:
        code = handle_exception(exc)
    return int(code)


if __name__ == "__main__":
    sys.exit(main())
