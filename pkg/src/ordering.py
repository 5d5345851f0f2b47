"""Comparability components and valid application orders of simple command sets"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import islice
from typing import Dict, Iterable, Iterator, List, Tuple

from src.algebra import CONSTRUCTION_PAIRS, DESTRUCTION_PAIRS, sequence_kind
from src.config import ORDER_LIMIT
from src.errors import MixedPairs, NoValidOrder, NotSimple
from src.model import TOP, Command, CommandSequence, NodePath, Step, TypeTag, sorted_commands


class ComponentKind(Enum):
    CONSTRUCTION = "construction"
    DESTRUCTION = "destruction"
    SINGLETON = "singleton"


@dataclass(frozen=True)
class Component:
    """
    Commands on pairwise related nodes under one topmost command

    `edges` lists (earlier, later) command pairs every valid order must respect:
    parent before child in a construction, child before parent in a destruction.
    """

    top: Command
    kind: ComponentKind
    commands: Tuple[Command, ...]
    edges: Tuple[Tuple[Command, Command], ...] = ()

    def __len__(self) -> int:
        return len(self.commands)

    def canonical(self) -> List[Command]:
        """Preorder for construction, postorder for destruction"""
        if self.kind is not ComponentKind.DESTRUCTION:
            return list(self.commands)

        by_node = {command.node: command for command in self.commands}
        children: Dict[NodePath, List[NodePath]] = {}
        for command in self.commands:
            if command is not self.top:
                children.setdefault(command.node.parent, []).append(command.node)

        order: List[Command] = []

        def visit(node: NodePath) -> None:
            for child in sorted(children.get(node, [])):
                visit(child)
            order.append(by_node[node])

        visit(self.top.node)
        return order


def _require_simple(u: Iterable[Step]) -> List[Command]:
    commands = list(u)
    flags = sequence_kind(commands)
    if not flags.simple:
        raise NotSimple("ordering needs a simple command set (one non-assertion command per node)")
    return sorted_commands(commands)


def _component_kind(top: Command) -> ComponentKind:
    if top.output is TypeTag.DIRECTORY and top.input is not TypeTag.DIRECTORY:
        return ComponentKind.CONSTRUCTION
    if top.input is TypeTag.DIRECTORY and top.output is not TypeTag.DIRECTORY:
        return ComponentKind.DESTRUCTION
    raise MixedPairs(f"{top} cannot head a component: it neither creates nor removes a directory")


def _build_component(top: Command, members: List[Command]) -> Component:
    if len(members) == 1:
        return Component(top, ComponentKind.SINGLETON, (top,))

    kind = _component_kind(top)
    by_node = {command.node: command for command in members}
    edges = []
    for command in members:
        if command is top:
            continue
        above = by_node.get(command.node.parent)
        if above is None:
            raise NoValidOrder(
                f"{command} and {top} are separated by the untouched node {command.node.parent}"
            )
        if kind is ComponentKind.CONSTRUCTION:
            if (above.code, command.code) not in CONSTRUCTION_PAIRS:
                raise MixedPairs(f"{above} then {command} is not a construction pair")
            edges.append((above, command))
        else:
            if (command.code, above.code) not in DESTRUCTION_PAIRS:
                raise MixedPairs(f"{command} then {above} is not a destruction pair")
            edges.append((command, above))
    return Component(top, kind, tuple(members), tuple(edges))


def components(u: Iterable[Step]) -> List[Component]:
    """
    Split a simple command set into its comparability components

    Each command joins the component of its highest ancestor-or-self node that
    the set touches. Components come back ordered by their topmost node.

    Raises:
        NotSimple: u is not a simple set
        NoValidOrder: a component skips an intermediate node
        MixedPairs: a component mixes construction and destruction pairs
    """
    commands = _require_simple(u)
    touched = {command.node for command in commands}

    groups: Dict[NodePath, List[Command]] = {}
    for command in commands:
        head = command.node
        for ancestor in command.node.ancestors():
            if ancestor in touched:
                head = ancestor
        groups.setdefault(head, []).append(command)

    by_node = {command.node: command for command in commands}
    return [_build_component(by_node[head], groups[head]) for head in sorted(groups)]


def order_canonical(u: Iterable[Step]) -> CommandSequence:
    """
    The deterministic member of orderset(u)

    Components in order of their topmost node; construction components
    topmost-first, destruction components topmost-last, siblings by node path.
    """
    ordered: List[Command] = []
    for component in components(u):
        ordered.extend(component.canonical())
    return tuple(ordered)


def _linear_extensions(
    commands: List[Command], edges: List[Tuple[Command, Command]]
) -> Iterator[CommandSequence]:
    waiting_on: Dict[Command, int] = {command: 0 for command in commands}
    successors: Dict[Command, List[Command]] = {command: [] for command in commands}
    for earlier, later in edges:
        waiting_on[later] += 1
        successors[earlier].append(later)

    prefix: List[Command] = []
    remaining = set(commands)

    def extend() -> Iterator[CommandSequence]:
        if not remaining:
            yield tuple(prefix)
            return
        ready = [c for c in commands if c in remaining and waiting_on[c] == 0]
        for command in ready:
            remaining.discard(command)
            prefix.append(command)
            for later in successors[command]:
                waiting_on[later] -= 1
            yield from extend()
            for later in successors[command]:
                waiting_on[later] += 1
            prefix.pop()
            remaining.add(command)

    return extend()


def enumerate_orders(u: Iterable[Step], limit: int = ORDER_LIMIT) -> List[CommandSequence]:
    """
    Distinct valid orders of u, including interleavings across components

    Args:
        u: Simple command set
        limit: Maximum number of orders returned; orderset(u) grows factorially

    Returns:
        Up to `limit` orders, the empty set yielding the single empty sequence
    """
    if limit < 1:
        raise ValueError("limit must be at least 1")
    parts = components(u)
    commands = [command for part in parts for command in part.commands]
    edges = [edge for part in parts for edge in part.edges]
    return list(islice(_linear_extensions(sorted_commands(commands), edges), limit))


def is_valid_order(s: Iterable[Step]) -> bool:
    """True iff s is one of the valid orders of its own command set"""
    steps = list(s)
    try:
        parts = components(steps)
    except NoValidOrder:
        return False
    position = {command: index for index, command in enumerate(steps)}
    return all(
        position[earlier] < position[later] for part in parts for earlier, later in part.edges
    )


def touches_between(u: Iterable[Command], upper: NodePath, lower: NodePath) -> bool:
    """Whether u has a command on every node strictly between upper and lower"""
    touched = {command.node for command in u}
    node = lower.parent
    while node is not TOP and node != upper:
        if node not in touched:
            return False
        node = node.parent
    return node == upper
