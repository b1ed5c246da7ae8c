import argparse

from .utils import common_parser
from . import model, run, topology, verify


def init_routers(parser: argparse.ArgumentParser) -> None:
    parent = common_parser()
    subparsers = parser.add_subparsers(dest="command", required=True)
    verify.register(subparsers, parent)
    run.register(subparsers, parent)
    model.register(subparsers, parent)
    topology.register(subparsers, parent)
