"""Update detection: the simple command set between two snapshots"""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List

from src.errors import BrokenFilesystemError
from src.model import Command, CommandSequence, Filesystem, NodeForest, check_tree_property
from src.model import sorted_commands
from src.ordering import order_canonical


@dataclass(frozen=True)
class UpdateSet:
    """One command per changed node, never an assertion"""

    commands: FrozenSet[Command]
    source_forest: NodeForest

    def ordered(self) -> CommandSequence:
        return order_canonical(self.commands)

    def sorted(self) -> List[Command]:
        return sorted_commands(self.commands)

    def __len__(self) -> int:
        return len(self.commands)

    def __bool__(self) -> bool:
        return bool(self.commands)


def _require_valid(fs: Filesystem, label: str) -> None:
    if fs.is_broken:
        raise BrokenFilesystemError(f"{label} filesystem is Broken")
    if not check_tree_property(fs):
        raise BrokenFilesystemError(f"{label} filesystem violates the tree property")


def detect(fs_base: Filesystem, fs_new: Filesystem) -> UpdateSet:
    """
    Compare two snapshots node by node

    Args:
        fs_base: Original snapshot
        fs_new: Current snapshot

    Returns:
        XY(n, new value) for every node whose value changed

    Raises:
        BrokenFilesystemError: either input is Broken or violates the tree property
    """
    _require_valid(fs_base, "base")
    _require_valid(fs_new, "new")

    forest = NodeForest.closure(fs_base.nodes() | fs_new.nodes())
    commands = set()
    for node in forest:
        before, after = fs_base.value_at(node), fs_new.value_at(node)
        if before != after:
            commands.add(Command(before.tag, after.tag, node, after))
    return UpdateSet(frozenset(commands), forest)


def detect_ordered(fs_base: Filesystem, fs_new: Filesystem) -> CommandSequence:
    """Detected commands in canonical order; applying them to fs_base yields fs_new"""
    return detect(fs_base, fs_new).ordered()
