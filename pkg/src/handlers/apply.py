"""Apply handler: carry out a command script on a directory"""
from argparse import Namespace
from pathlib import Path

from src.applier import apply_script
from src.codec import load_script
from src.errors import ExitCode, InputFileError, ScriptFormatError
from src.handlers.options import add_scan_options, scan_options


def register(subparsers) -> None:
    parser = subparsers.add_parser("apply", help="Apply a command script to a directory")
    parser.add_argument("script", help="Command script (FSCMDS 1 text)")
    parser.add_argument("directory", help="Replica to change")
    parser.add_argument("--blobs", help="Directory providing the content of written files")
    parser.add_argument(
        "--dry-run", action="store_true", help="Simulate and check blobs without changing anything"
    )
    add_scan_options(parser)
    parser.set_defaults(handler=run)


def run(args: Namespace) -> int:
    try:
        text = Path(args.script).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ScriptFormatError(f"{args.script}: not UTF-8 text ({e})")
    except OSError as e:
        raise InputFileError(f"cannot read script {args.script}: {e.strerror or e}")
    script = load_script(text)
    report = apply_script(
        script,
        args.directory,
        blobs=args.blobs,
        dry_run=args.dry_run,
        options=scan_options(args),
    )
    if report.dry_run:
        print(f"✓ Dry run: {report.planned} commands would apply cleanly to {args.directory}")
    else:
        print(f"✓ Applied {len(report.completed)} commands to {args.directory}")
    return ExitCode.OK
