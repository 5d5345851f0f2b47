"""Reconciliation of two update sets from a common ancestor"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, List, Optional, Tuple

from src.algebra import independent, sequence_kind
from src.detect import detect
from src.errors import MaximalityViolation, NoValidOrder, NotExcluded, NotSimple
from src.model import (
    Command,
    CommandSequence,
    Filesystem,
    NodePath,
    Step,
    apply_sequence,
    sorted_commands,
)
from src.oracle.space import FsSpace
from src.ordering import order_canonical


class ConflictKind(Enum):
    SAME_NODE_DIFFERENT_VALUE = "same-node-different-value"
    RELATED_NODES = "related-nodes"


@dataclass(frozen=True)
class ConflictPair:
    """A dependent pair: one command from each side, neither propagated"""

    from_a: Command
    from_b: Command
    node_witness: NodePath
    kind: ConflictKind

    @classmethod
    def between(cls, alpha: Command, beta: Command) -> ConflictPair:
        if alpha.node == beta.node:
            return cls(alpha, beta, alpha.node, ConflictKind.SAME_NODE_DIFFERENT_VALUE)
        upper = alpha.node if alpha.node.is_ancestor_of(beta.node) else beta.node
        return cls(alpha, beta, upper, ConflictKind.RELATED_NODES)

    def swapped(self) -> ConflictPair:
        return ConflictPair(self.from_b, self.from_a, self.node_witness, self.kind)

    def __str__(self) -> str:
        return f"{self.from_a} | {self.from_b}"


@dataclass(frozen=True)
class ReconcilePlan:
    """
    Result of reconciling updates A and B

    to_b holds the commands of A∖B independent of all of B∖A, ordered for
    application to replica B; to_a is the mirror image.
    """

    to_b: CommandSequence
    to_a: CommandSequence
    conflicts: Tuple[ConflictPair, ...]
    a_minus_b: FrozenSet[Command]
    b_minus_a: FrozenSet[Command]
    a_intersect_b: FrozenSet[Command]

    @property
    def conflict_nodes(self) -> FrozenSet[NodePath]:
        """Every node touched by a command of some conflict pair"""
        nodes = set()
        for pair in self.conflicts:
            nodes.add(pair.from_a.node)
            nodes.add(pair.from_b.node)
        return frozenset(nodes)

    @property
    def has_conflicts(self) -> bool:
        return bool(self.conflicts)

    def excluded_from_a(self) -> List[Command]:
        """Commands of A∖B withheld from replica B"""
        return sorted_commands(self.a_minus_b - set(self.to_b))

    def excluded_from_b(self) -> List[Command]:
        return sorted_commands(self.b_minus_a - set(self.to_a))


@dataclass(frozen=True)
class DirtySet:
    """Up-closed set of nodes a replica may have changed"""

    nodes: FrozenSet[NodePath]

    def __contains__(self, node: object) -> bool:
        return node in self.nodes

    def __len__(self) -> int:
        return len(self.nodes)


class MaximalityKind(Enum):
    BREAKS_REPLICA = "breaks-replica"
    OVERRIDES = "overrides"


@dataclass(frozen=True)
class MaximalityVerdict:
    kind: MaximalityKind
    node: NodePath


def _as_simple_set(updates: Iterable[Step], label: str) -> FrozenSet[Command]:
    steps = list(updates)
    if not sequence_kind(steps).simple:
        raise NotSimple(f"update {label} is not simple")
    return frozenset(steps)


def reconcile(a: Iterable[Step], b: Iterable[Step]) -> ReconcilePlan:
    """
    Compute what each replica can safely receive from the other

    Args:
        a: Simple update detected on replica A
        b: Simple update detected on replica B, from the same ancestor

    Returns:
        Ordered propagation sequences both ways plus every dependent pair

    Raises:
        NotSimple: an input has two commands on one node or an assertion
    """
    set_a = _as_simple_set(a, "A")
    set_b = _as_simple_set(b, "B")
    a_only, b_only = set_a - set_b, set_b - set_a

    only_a = sorted_commands(a_only)
    only_b = sorted_commands(b_only)
    conflicts = []
    blocked_a, blocked_b = set(), set()
    for alpha in only_a:
        for beta in only_b:
            if not independent(alpha, beta):
                conflicts.append(ConflictPair.between(alpha, beta))
                blocked_a.add(alpha)
                blocked_b.add(beta)

    return ReconcilePlan(
        to_b=order_canonical(a_only - blocked_a),
        to_a=order_canonical(b_only - blocked_b),
        conflicts=tuple(conflicts),
        a_minus_b=a_only,
        b_minus_a=b_only,
        a_intersect_b=set_a & set_b,
    )


def dirty_marks(fs_base: Filesystem, fs_new: Filesystem) -> DirtySet:
    """Changed nodes and all their ancestors"""
    marked = set()
    for command in detect(fs_base, fs_new).commands:
        marked.add(command.node)
        marked.update(command.node.ancestors())
    return DirtySet(frozenset(marked))


def state_based_conflicts(
    fs_a: Filesystem, fs_b: Filesystem, dirty_a: DirtySet, dirty_b: DirtySet
) -> FrozenSet[NodePath]:
    """
    Conflicts as a state-based synchronizer reports them

    A node conflicts when both replicas marked it dirty, its values differ and
    they are not both directories.
    """
    conflicting = set()
    for node in dirty_a.nodes & dirty_b.nodes:
        left, right = fs_a.value_at(node), fs_b.value_at(node)
        if left != right and not (left.is_directory and right.is_directory):
            conflicting.add(node)
    return frozenset(conflicting)


def _prefix_sequence(prefix: Iterable[Command], plan: ReconcilePlan, extra: Command):
    chosen = tuple(prefix)
    for command in chosen:
        if command not in plan.a_minus_b:
            raise NotExcluded(f"prefix command {command} is not a command of A∖B")
    if extra in chosen:
        raise ValueError(f"prefix already contains {extra}")
    try:
        return order_canonical(chosen)
    except NoValidOrder:
        return chosen


def maximality_witness(
    a: Iterable[Step],
    b: Iterable[Step],
    extra: Command,
    space: Optional[FsSpace] = None,
    prefix: Optional[Iterable[Command]] = None,
) -> MaximalityVerdict:
    """
    Show that an excluded command cannot be propagated to replica B

    Replays b, then the prefix (the propagated set by default), then `extra`
    on every filesystem of the space where both a and b work.

    Args:
        a: Simple update of replica A
        b: Simple update of replica B
        extra: A command of A∖B that reconciliation withheld
        space: FsSpace to quantify over; defaults to one covering every node
            and file value the updates mention
        prefix: Commands of A∖B applied before `extra`, in canonical order
            when they have one and as given otherwise

    Returns:
        BREAKS_REPLICA when every such replica breaks, OVERRIDES(node) when
        the prefix or `extra` overwrites a change B made at `node`

    Raises:
        NotExcluded: `extra` or a prefix command is not in A∖B, or `extra`
            was propagated
        MaximalityViolation: neither outcome holds
    """
    a_steps, b_steps = tuple(a), tuple(b)
    plan = reconcile(a_steps, b_steps)
    if extra not in plan.a_minus_b:
        raise NotExcluded(f"{extra} is not a command of A∖B")
    if extra in plan.to_b:
        raise NotExcluded(f"{extra} is independent of B∖A and was propagated")

    head = plan.to_b if prefix is None else _prefix_sequence(prefix, plan, extra)
    tail = head + (extra,)
    if space is None:
        space = FsSpace.covering(a_steps + b_steps + tail)

    replicas = []
    for fs in space.filesystems:
        if apply_sequence(fs, a_steps).is_broken:
            continue
        fs_b = apply_sequence(fs, b_steps)
        if not fs_b.is_broken:
            replicas.append((fs_b, apply_sequence(fs_b, tail)))

    if all(result.is_broken for _, result in replicas):
        return MaximalityVerdict(MaximalityKind.BREAKS_REPLICA, extra.node)

    # extra's own node first, then B's other nodes in path order
    changed_by_b = sorted(
        {beta.node for beta in plan.b_minus_a}, key=lambda n: (n != extra.node, n.segments)
    )
    for node in changed_by_b:
        if any(
            not result.is_broken and result.value_at(node) != fs_b.value_at(node)
            for fs_b, result in replicas
        ):
            return MaximalityVerdict(MaximalityKind.OVERRIDES, node)
    raise MaximalityViolation(f"{extra} can follow B's update without breaking or overriding it")
