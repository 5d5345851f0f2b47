"""Verify handler: brute-force check of the command-pair rules"""
from argparse import Namespace

from src.config import VERIFY_CHAIN, VERIFY_FILE_VALUES, VERIFY_ROOTS
from src.errors import ExitCode
from src.handlers.options import bounded_int
from src.oracle import FsSpace, verify_rules
from src.oracle.space import CHAIN_NAMES, ROOT_NAMES


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify-rules", help="Check every rule by enumeration")
    parser.add_argument(
        "--nodes",
        type=bounded_int(1, 3 + len(ROOT_NAMES)),
        help="Shorthand: a chain of min(N, 3) nodes plus N-3 extra roots",
    )
    parser.add_argument(
        "--chain",
        type=bounded_int(1, len(CHAIN_NAMES)),
        default=VERIFY_CHAIN,
        help="Length of the ancestor chain /a, /a/x, ...",
    )
    parser.add_argument(
        "--roots",
        type=bounded_int(0, len(ROOT_NAMES)),
        default=VERIFY_ROOTS,
        help="Extra incomparable roots",
    )
    parser.add_argument(
        "--file-values",
        type=bounded_int(2),
        default=VERIFY_FILE_VALUES,
        help="Distinct file values in the alphabet",
    )
    parser.set_defaults(handler=run)


def space_from_args(args: Namespace) -> FsSpace:
    chain, roots = args.chain, args.roots
    if args.nodes is not None:
        chain, roots = min(args.nodes, 3), max(args.nodes - 3, 0)
    return FsSpace.default(chain=chain, roots=roots, file_values=args.file_values)


def run(args: Namespace) -> int:
    """Print one RULE line per rule; exit 0 only when every rule holds and is covered"""
    space = space_from_args(args)
    print(f"Verifying rules over {space.describe()}, {len(space)} filesystems")
    report = verify_rules(space)
    print(report.render(), end="")

    for rule in report.not_covered():
        print(f"⚠ Rule {rule}: no instantiations in this space")
    for rule in report.failed():
        result = report.result(rule)
        print(f"✗ Rule {rule}: {result.failures} failures, e.g. {'; '.join(result.examples)}")
    if report.ok:
        print(f"✓ All {len(report.results)} rules hold")
        return ExitCode.OK
    return ExitCode.CONFLICTS
