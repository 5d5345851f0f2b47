"""Command line entry point for the fsalg synchronizer"""
import sys
from typing import List, Optional

from src.errors import ApplyIOError, ExitCode, FsalgError, ScanError
from src.handlers import build_parser


def _report_error(e: FsalgError) -> None:
    print(f"✗ {e}", file=sys.stderr)
    if isinstance(e, ScanError):
        for failure in e.failures:
            print(f"  {failure}", file=sys.stderr)
    elif isinstance(e, ApplyIOError):
        print(f"  completed {len(e.completed)} commands before the failure:", file=sys.stderr)
        for line in e.completed:
            print(f"  {line}", file=sys.stderr)
        print(f"  resume from command #{e.failed_index + 1}", file=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point for the CLI

    Args:
        argv: List of arguments (if None, uses sys.argv)

    Returns:
        int: Exit code (0 success, 1 conflicts or rule failures, 2 would-break
        or I/O error, 3 usage or format error)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        return int(args.handler(args))
    except FsalgError as e:
        _report_error(e)
        return int(e.exit_code)
    except OSError as e:
        print(f"✗ {e}", file=sys.stderr)
        return int(ExitCode.BREAKS)


if __name__ == "__main__":
    sys.exit(main())
