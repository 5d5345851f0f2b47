"""Shared argument helpers for the CLI verbs"""
import argparse
from typing import Optional

from src.config import HASH_THREADS
from src.models import ScanOptions, SymlinkPolicy


def bounded_int(minimum: int, maximum: Optional[int] = None):
    """argparse type accepting integers in [minimum, maximum]"""

    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}, got {value}")
        if maximum is not None and value > maximum:
            raise argparse.ArgumentTypeError(f"must be at most {maximum}, got {value}")
        return value

    return parse


def add_scan_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--symlinks",
        choices=[policy.value for policy in SymlinkPolicy],
        default=SymlinkPolicy.HASH_TARGET.value,
        help="Treat symlinks as files hashing their target, or skip them",
    )
    parser.add_argument(
        "--threads",
        type=bounded_int(1),
        default=HASH_THREADS,
        help=f"Parallel hashing workers (default {HASH_THREADS}, env FSALG_HASH_THREADS)",
    )


def scan_options(args: argparse.Namespace) -> ScanOptions:
    return ScanOptions(symlinks=SymlinkPolicy(args.symlinks), threads=args.threads)
