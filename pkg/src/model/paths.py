"""Node paths and the namespace forest"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import total_ordering
from typing import Iterable, Iterator, List, Union


class Top(Enum):
    """Sentinel returned as the parent of a root node"""
    TOP = "⊤"

    def __repr__(self) -> str:
        return "⊤"


TOP = Top.TOP


class NodeRelation(Enum):
    """How a node n relates to a node m"""
    EQUAL = "equal"
    ANCESTOR = "ancestor"
    DESCENDANT = "descendant"
    INCOMPARABLE = "incomparable"


@total_ordering
@dataclass(frozen=True, slots=True)
class NodePath:
    """
    A node in the namespace forest

    Ordering compares segment tuples. Python compares strings by code point,
    which coincides with bytewise comparison of their UTF-8 encodings, so the
    order is locale-free and a parent always sorts before its children.
    """

    segments: tuple[str, ...]

    def __post_init__(self):
        if not self.segments:
            raise ValueError("a node path needs at least one segment")
        for segment in self.segments:
            if not isinstance(segment, str) or not segment:
                raise ValueError(f"invalid path segment: {segment!r}")
            if "/" in segment or "\0" in segment:
                raise ValueError(f"path segment may not contain '/' or NUL: {segment!r}")

    @classmethod
    def parse(cls, text: str) -> NodePath:
        """Parse the textual form `/a/x`"""
        stripped = text.strip("/")
        if not stripped:
            raise ValueError(f"not a node path: {text!r}")
        return cls(tuple(stripped.split("/")))

    @property
    def parent(self) -> Union[NodePath, Top]:
        if len(self.segments) == 1:
            return TOP
        return NodePath(self.segments[:-1])

    @property
    def depth(self) -> int:
        return len(self.segments)

    @property
    def name(self) -> str:
        return self.segments[-1]

    def child(self, name: str) -> NodePath:
        return NodePath(self.segments + (name,))

    def ancestors(self) -> Iterator[NodePath]:
        """Yield strict ancestors, nearest first"""
        for end in range(len(self.segments) - 1, 0, -1):
            yield NodePath(self.segments[:end])

    def is_ancestor_of(self, other: NodePath) -> bool:
        return (
            len(self.segments) < len(other.segments)
            and other.segments[: len(self.segments)] == self.segments
        )

    def __lt__(self, other: NodePath) -> bool:
        if not isinstance(other, NodePath):
            return NotImplemented
        return self.segments < other.segments

    def __str__(self) -> str:
        return "/" + "/".join(self.segments)

    def __repr__(self) -> str:
        return f"NodePath({str(self)!r})"


def as_node(node: Union[NodePath, str]) -> NodePath:
    """Accept either a NodePath or its textual form"""
    return node if isinstance(node, NodePath) else NodePath.parse(node)


def parent(node: NodePath) -> Union[NodePath, Top]:
    """Parent of a node, or ⊤ for a root"""
    return node.parent


def node_relation(n: NodePath, m: NodePath) -> NodeRelation:
    """Relation of n to m: ANCESTOR means n is a strict prefix of m"""
    if n == m:
        return NodeRelation.EQUAL
    if n.is_ancestor_of(m):
        return NodeRelation.ANCESTOR
    if m.is_ancestor_of(n):
        return NodeRelation.DESCENDANT
    return NodeRelation.INCOMPARABLE


@dataclass(frozen=True)
class NodeForest:
    """A finite set of nodes closed under parent"""

    nodes: frozenset[NodePath]

    def __post_init__(self):
        for node in self.nodes:
            up = node.parent
            if up is not TOP and up not in self.nodes:
                raise ValueError(f"forest is not closed under parent: {up} missing for {node}")

    @classmethod
    def closure(cls, paths: Iterable[Union[NodePath, str]]) -> NodeForest:
        """Smallest forest containing every given path"""
        nodes = set()
        for path in paths:
            node = as_node(path)
            nodes.add(node)
            nodes.update(node.ancestors())
        return cls(frozenset(nodes))

    def __contains__(self, node: object) -> bool:
        return node in self.nodes

    def __iter__(self) -> Iterator[NodePath]:
        return iter(sorted(self.nodes))

    def __len__(self) -> int:
        return len(self.nodes)

    def roots(self) -> List[NodePath]:
        return sorted(node for node in self.nodes if node.parent is TOP)

    def children(self, node: NodePath) -> List[NodePath]:
        return sorted(m for m in self.nodes if m.parent == node)
