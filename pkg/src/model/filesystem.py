"""Filesystems and the exact semantics of applying commands"""
from __future__ import annotations

from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from src.model.commands import BREAK, Step
from src.model.paths import TOP, NodePath, as_node
from src.model.values import EMPTY, TypeTag, Value


class Filesystem:
    """
    A total map from nodes to values, or the Broken state

    Only non-empty nodes are stored; every other node reads as Empty, so two
    working filesystems are equal exactly when they agree at every node.
    """

    __slots__ = ("_values", "_broken", "_hash")

    def __init__(self, values: Optional[Mapping[NodePath, Value]] = None, *, broken: bool = False):
        self._broken = broken
        self._values: Dict[NodePath, Value] = {}
        self._hash: Optional[int] = None
        if values and not broken:
            self._values = {node: value for node, value in values.items() if not value.is_empty}

    @classmethod
    def of(cls, values: Mapping[Union[NodePath, str], Value]) -> Filesystem:
        """Build from a mapping whose keys may be textual paths"""
        return cls({as_node(node): value for node, value in values.items()})

    @property
    def is_broken(self) -> bool:
        return self._broken

    def value_at(self, node: NodePath) -> Value:
        return self._values.get(node, EMPTY)

    def tag_at(self, node: NodePath) -> TypeTag:
        return self.value_at(node).tag

    def replace(self, node: NodePath, value: Value) -> Filesystem:
        """The replacement fs[value / node]"""
        values = dict(self._values)
        if value.is_empty:
            values.pop(node, None)
        else:
            values[node] = value
        return Filesystem(values)

    def items(self) -> Iterator[Tuple[NodePath, Value]]:
        """Non-empty nodes in node order"""
        for node in sorted(self._values):
            yield node, self._values[node]

    def nodes(self) -> frozenset[NodePath]:
        return frozenset(self._values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Filesystem):
            return NotImplemented
        if self._broken or other._broken:
            return self._broken and other._broken
        return self._values == other._values

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._broken, frozenset(self._values.items())))
        return self._hash

    def __repr__(self) -> str:
        if self._broken:
            return "Filesystem(BROKEN)"
        body = ", ".join(f"{node}: {value}" for node, value in self.items())
        return f"Filesystem({{{body}}})"


BROKEN = Filesystem(broken=True)


def check_tree_property(fs: Filesystem) -> bool:
    """Every non-empty node with a parent has a directory at the parent"""
    if fs.is_broken:
        raise ValueError("the tree property is undefined for a Broken filesystem")
    for node, _ in fs.items():
        up = node.parent
        if up is not TOP and not fs.value_at(up).is_directory:
            return False
    return True


def apply_command(fs: Filesystem, command: Step) -> Filesystem:
    """
    Apply one command

    Returns Broken when the filesystem is already broken, when the type at the
    command's node differs from its input type, or when the replacement
    violates the tree property.
    """
    if command is BREAK or fs.is_broken:
        return BROKEN
    if fs.tag_at(command.node) is not command.input:
        return BROKEN
    replaced = fs.replace(command.node, command.value)
    if not check_tree_property(replaced):
        return BROKEN
    return replaced


def apply_sequence(fs: Filesystem, steps: Iterable[Step]) -> Filesystem:
    """Left fold of apply_command; the leftmost command applies first"""
    for step in steps:
        fs = apply_command(fs, step)
        if fs.is_broken:
            return BROKEN
    return fs


def first_breaking_step(fs: Filesystem, steps: Iterable[Step]) -> Optional[int]:
    """Index of the command that breaks fs, or None when the sequence works"""
    if fs.is_broken:
        return 0
    for index, step in enumerate(steps):
        fs = apply_command(fs, step)
        if fs.is_broken:
            return index
    return None

