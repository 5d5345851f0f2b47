"""Handlers package for the fsalg command line"""
import argparse
import sys

from src import __version__
from src.errors import ExitCode

from . import apply, diff, reconcile, snapshot, verify

VERBS = (snapshot, diff, reconcile, apply, verify)


class CliParser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with the usage code"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(ExitCode.USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> CliParser:
    """Create the top-level parser with one sub-command per verb"""
    parser = CliParser(
        prog="fsalg",
        description="Snapshot, diff, reconcile and synchronize directory trees",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for verb in VERBS:
        verb.register(subparsers)
    return parser


__all__ = ["CliParser", "build_parser"]
