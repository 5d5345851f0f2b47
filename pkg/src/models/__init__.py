"""Models package for the fsalg synchronizer"""
from .snapshot import EntryKind, ScanOptions, Snapshot, SnapshotEntry, SymlinkPolicy
from .reports import ApplyReport, RuleReport, RuleResult

__all__ = [
    "EntryKind",
    "ScanOptions",
    "Snapshot",
    "SnapshotEntry",
    "SymlinkPolicy",
    "ApplyReport",
    "RuleReport",
    "RuleResult",
]
