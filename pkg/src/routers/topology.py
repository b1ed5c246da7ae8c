import argparse
import sys

from src.handler import ExitCode
from src.protocol import build_topology


def dump_topology_command(args: argparse.Namespace) -> ExitCode:
    topology = build_topology(args.alg.split(",")[0], args.procs)
    sys.stdout.write(topology.dump())
    return ExitCode.OK


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("dump-topology", parents=[parent], help="print the trees one rank per line")
    parser.set_defaults(handler=dump_topology_command)
