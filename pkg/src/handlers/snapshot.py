"""Snapshot handler: scan a directory into a snapshot file"""
from argparse import Namespace

from src.errors import ExitCode
from src.handlers.options import add_scan_options, scan_options
from src.scanner import scan


def register(subparsers) -> None:
    parser = subparsers.add_parser("snapshot", help="Scan a directory into a snapshot file")
    parser.add_argument("directory", help="Directory to scan")
    parser.add_argument("-o", "--output", required=True, help="Snapshot file to write")
    add_scan_options(parser)
    parser.set_defaults(handler=run)


def run(args: Namespace) -> int:
    """
    Scan `directory` and save the snapshot

    - **directory**: Replica root; its children become the forest roots
    - **--output**: Snapshot file (FSSNAP 1 text)
    """
    snap = scan(args.directory, scan_options(args))
    snap.save(args.output)
    print(f"✓ Scanned {args.directory}: {len(snap)} entries written to {args.output}")
    return ExitCode.OK
