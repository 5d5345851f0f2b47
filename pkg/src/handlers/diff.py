"""Diff handler: the command script between two snapshots"""
from argparse import Namespace
from pathlib import Path

from src.codec import dump_script
from src.detect import detect_ordered
from src.errors import ExitCode
from src.models import Snapshot


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "diff", help="Write the script turning one snapshot into another"
    )
    parser.add_argument("--base", required=True, help="Original snapshot")
    parser.add_argument("--current", required=True, help="Current snapshot")
    parser.add_argument("-o", "--output", required=True, help="Command script to write")
    parser.set_defaults(handler=run)


def run(args: Namespace) -> int:
    """Detect updates and write them in canonical order"""
    base = Snapshot.load(args.base)
    current = Snapshot.load(args.current)
    script = detect_ordered(base.to_filesystem(), current.to_filesystem())
    Path(args.output).write_text(dump_script(script), encoding="utf-8", newline="\n")
    print(f"✓ {len(script)} commands written to {args.output}")
    return ExitCode.OK
