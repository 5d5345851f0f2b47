"""Reconcile handler: propagation scripts for two replicas and their conflicts"""
from argparse import Namespace
from pathlib import Path

from src.codec import dump_script, format_conflicts
from src.detect import detect
from src.errors import ExitCode
from src.models import Snapshot
from src.reconcile import reconcile


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "reconcile", help="Compute what each replica should receive from the other"
    )
    parser.add_argument("--base", required=True, help="Common ancestor snapshot")
    parser.add_argument("--a", required=True, help="Snapshot of replica A")
    parser.add_argument("--b", required=True, help="Snapshot of replica B")
    parser.add_argument("--out-a", required=True, help="Script to apply to replica A")
    parser.add_argument("--out-b", required=True, help="Script to apply to replica B")
    parser.add_argument("--conflicts", required=True, help="Conflict report to write")
    parser.set_defaults(handler=run)


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def run(args: Namespace) -> int:
    """
    Detect both updates against the base and reconcile them

    Scripts and the report are always written; the exit code is 1 when
    conflicts remain.
    """
    base = Snapshot.load(args.base).to_filesystem()
    update_a = detect(base, Snapshot.load(args.a).to_filesystem())
    update_b = detect(base, Snapshot.load(args.b).to_filesystem())
    plan = reconcile(update_a.commands, update_b.commands)

    _write(args.out_a, dump_script(plan.to_a))
    _write(args.out_b, dump_script(plan.to_b))
    _write(args.conflicts, format_conflicts(plan.conflicts))

    print(f"✓ {len(plan.to_b)} commands for replica B, {len(plan.to_a)} for replica A")
    if not plan.conflicts:
        return ExitCode.OK
    for pair in plan.conflicts:
        print(f"⚠ Conflict at {pair.node_witness}: {pair.from_a} | {pair.from_b}")
    print(f"✗ {len(plan.conflicts)} conflicts written to {args.conflicts}")
    return ExitCode.CONFLICTS
