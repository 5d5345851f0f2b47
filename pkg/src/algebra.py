"""Command-pair algebra: classification, independence, inverses and simplification"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional

from src.errors import BreaksEverything
from src.model import (
    BREAK,
    DIRECTORY,
    Command,
    CommandSequence,
    Filesystem,
    NodePath,
    Step,
    TypeTag,
    as_sequence,
    canonical_value,
    check_tree_property,
    first_breaking_step,
)


class Relation(Enum):
    """Relation of the first command's node to the second's, as used by the pair table"""
    EQUAL = "equal"
    PARENT = "parent"
    CHILD = "child"
    DISTANT_ANCESTOR = "distant-ancestor"
    DISTANT_DESCENDANT = "distant-descendant"
    INCOMPARABLE = "incomparable"


class PairKind(Enum):
    COMMUTE_INCOMPARABLE = "commute-incomparable"
    BREAKS_ALWAYS = "breaks-always"
    SIMPLIFIES_TO_EMPTY = "simplifies-to-empty"
    SIMPLIFIES_TO_SINGLE = "simplifies-to-single"
    CONSTRUCTION_PAIR = "construction-pair"
    DESTRUCTION_PAIR = "destruction-pair"
    ASSERTION_ABSORBED = "assertion-absorbed"
    ORDERED_ONLY_THIS_WAY = "ordered-only-this-way"


@dataclass(frozen=True)
class PairClass:
    """
    Class governing the adjacent pair c1·c2

    `merged` is the single equivalent command for SIMPLIFIES_TO_SINGLE, and the
    surviving command for ASSERTION_ABSORBED (None when both commands are
    assertions that absorb each other).
    """

    kind: PairKind
    merged: Optional[Command] = None

    def __str__(self) -> str:
        if self.merged is None:
            return self.kind.value
        return f"{self.kind.value}({self.merged})"


@dataclass(frozen=True)
class SequenceKindFlags:
    minimal: bool
    simple: bool


# (parent code, child code), parent applied first
CONSTRUCTION_PAIRS = frozenset({("bd", "bf"), ("bd", "bd"), ("fd", "bf"), ("fd", "bd")})
# (child code, parent code), child applied first
DESTRUCTION_PAIRS = frozenset({("fb", "db"), ("fb", "df"), ("db", "db"), ("db", "df")})

_UPPER = (Relation.PARENT, Relation.DISTANT_ANCESTOR)


def fine_relation(n: NodePath, m: NodePath) -> Relation:
    """Relation of n to m, distinguishing direct parents from distant ancestors"""
    if n == m:
        return Relation.EQUAL
    if n.is_ancestor_of(m):
        return Relation.PARENT if m.parent == n else Relation.DISTANT_ANCESTOR
    if m.is_ancestor_of(n):
        return Relation.CHILD if n.parent == m else Relation.DISTANT_DESCENDANT
    return Relation.INCOMPARABLE


def is_assertion(command: Command) -> bool:
    """bb and dd either break a filesystem or leave it unchanged"""
    return command.is_assertion


def classify_pair(c1: Command, c2: Command) -> PairClass:
    """
    Classify c1·c2 (c1 applied first) by the closed rule table

    The table only looks at the two tag pairs, the fine node relation and, for
    merged commands, the second command's value.
    """
    if c1 is BREAK or c2 is BREAK:
        raise ValueError("Break has no pair class")
    relation = fine_relation(c1.node, c2.node)

    if relation is Relation.INCOMPARABLE:
        return PairClass(PairKind.COMMUTE_INCOMPARABLE)

    if relation is Relation.EQUAL:
        if c1.output is not c2.input:
            return PairClass(PairKind.BREAKS_ALWAYS)
        if c1.input is c2.output and c1.input is not TypeTag.FILE:
            return PairClass(PairKind.SIMPLIFIES_TO_EMPTY)
        merged = Command(c1.input, c2.output, c1.node, c2.value)
        return PairClass(PairKind.SIMPLIFIES_TO_SINGLE, merged)

    upper, lower = (c1, c2) if relation in _UPPER else (c2, c1)
    if upper.code == "dd" and lower.code == "bb":
        return PairClass(PairKind.ASSERTION_ABSORBED)
    if upper.code == "dd":
        return PairClass(PairKind.ASSERTION_ABSORBED, lower)
    if lower.code == "bb":
        return PairClass(PairKind.ASSERTION_ABSORBED, upper)

    if relation is Relation.PARENT and (c1.code, c2.code) in CONSTRUCTION_PAIRS:
        return PairClass(PairKind.CONSTRUCTION_PAIR)
    if relation is Relation.CHILD and (c1.code, c2.code) in DESTRUCTION_PAIRS:
        return PairClass(PairKind.DESTRUCTION_PAIR)
    return PairClass(PairKind.BREAKS_ALWAYS)


def independent(c1: Step, c2: Step) -> bool:
    """
    c1 ⋈ c2: same effect in either order and not breaking every filesystem

    Distinct non-assertion commands are independent exactly when their nodes
    are incomparable. On related nodes an assertion commutes when it is a dd
    above or a bb below the other command.
    """
    if c1 is BREAK or c2 is BREAK:
        return False
    if c1 == c2:
        return c1.input is c1.output
    relation = fine_relation(c1.node, c2.node)
    if relation is Relation.INCOMPARABLE:
        return True
    if relation is Relation.EQUAL:
        return False
    upper, lower = (c1, c2) if relation in _UPPER else (c2, c1)
    return upper.code == "dd" or lower.code == "bb"


def independent_seq(s: Iterable[Step], t: Iterable[Step]) -> bool:
    """Pairwise independence over the cross product"""
    right = list(t)
    return all(independent(alpha, beta) for alpha in s for beta in right)


def inverse(command: Command) -> Command:
    """
    Swap input and output types

    The new output carries the canonical value of its type; for files that is
    the placeholder content identity.
    """
    if command is BREAK:
        raise ValueError("Break has no inverse")
    return Command(command.output, command.input, command.node, canonical_value(command.input))


def inverse_seq(s: Iterable[Step]) -> CommandSequence:
    """Inverses of the commands, in reverse order"""
    return tuple(inverse(command) for command in reversed(as_sequence(s)))


def sequence_kind(s: Iterable[Step]) -> SequenceKindFlags:
    """Minimal: at most one command per node. Simple: minimal without assertions."""
    steps = as_sequence(s)
    if any(step is BREAK for step in steps):
        return SequenceKindFlags(minimal=False, simple=False)
    nodes = [step.node for step in steps]
    minimal = len(nodes) == len(set(nodes))
    simple = minimal and not any(step.is_assertion for step in steps)
    return SequenceKindFlags(minimal=minimal, simple=simple)


def least_demanding_filesystem(s: Iterable[Command]) -> Optional[Filesystem]:
    """
    The filesystem on which s is most likely to work

    Touched nodes start with the input type of their first command. Untouched
    ancestors are directories exactly when some touched descendant is ever
    non-empty; every other node is Empty. Commands only test types, so s works
    on some filesystem iff it works on this one. Returns None when the forced
    types already violate the tree property.
    """
    first_input: Dict[NodePath, TypeTag] = {}
    ever_filled: set = set()
    for command in s:
        first_input.setdefault(command.node, command.input)
        if command.input is not TypeTag.EMPTY or command.output is not TypeTag.EMPTY:
            ever_filled.add(command.node)

    values = {node: canonical_value(tag) for node, tag in first_input.items()}
    for node in ever_filled:
        for ancestor in node.ancestors():
            if ancestor not in first_input:
                values[ancestor] = DIRECTORY
    fs = Filesystem(values)
    return fs if check_tree_property(fs) else None


def can_work(s: Iterable[Step]) -> bool:
    """w(s): some filesystem is not broken by s"""
    steps = as_sequence(s)
    if any(step is BREAK for step in steps):
        return False
    witness = least_demanding_filesystem(steps)
    return witness is not None and first_breaking_step(witness, steps) is None


def _merge_runs(steps: CommandSequence) -> List[Command]:
    runs: Dict[NodePath, List[Command]] = {}
    for command in steps:
        runs.setdefault(command.node, []).append(command)

    merged = []
    for node, run in runs.items():
        source, target = run[0].input, run[-1].output
        if source is target and source is not TypeTag.FILE:
            # net assertion
            continue
        merged.append(Command(source, target, node, run[-1].value))
    return merged


def simplify(s: Iterable[Step]) -> CommandSequence:
    """
    Convert a recorded command log into an equivalent simple sequence

    Every filesystem the log does not break is mapped identically by the
    result. Same-node runs merge into one command, net assertions vanish and
    the remaining set is put in canonical order.

    Raises:
        BreaksEverything: the log breaks every filesystem
    """
    from src.ordering import order_canonical

    steps = as_sequence(s)
    for index, step in enumerate(steps):
        if step is BREAK:
            raise BreaksEverything("the sequence contains Break", index)

    witness = least_demanding_filesystem(steps)
    if witness is None:
        raise BreaksEverything("no filesystem has the input types the sequence requires")
    index = first_breaking_step(witness, steps)
    if index is not None:
        raise BreaksEverything(f"{steps[index]} breaks every filesystem at step {index + 1}", index)

    return order_canonical(_merge_runs(steps))
