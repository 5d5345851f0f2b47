"""Behavioural relations between sequences, decided by enumeration"""
from typing import Iterable, Optional

from src.algebra import PairClass, PairKind, Relation, fine_relation
from src.model import BREAK_SEQUENCE, Command, Filesystem, Step, TypeTag
from src.oracle.space import FsSpace


def equivalent(s1: Iterable[Step], s2: Iterable[Step], space: FsSpace) -> bool:
    """s1 ≡ s2: the same result on every filesystem, Broken included"""
    return space.outcomes(s1) == space.outcomes(s2)


def extends(s1: Iterable[Step], s2: Iterable[Step], space: FsSpace) -> bool:
    """s1 ⊑ s2: s2 behaves like s1 wherever s1 does not break"""
    return all(
        left == right
        for left, right in zip(space.outcomes(s1), space.outcomes(s2))
        if not left.is_broken
    )


def breaks_everything(s: Iterable[Step], space: FsSpace) -> bool:
    return equivalent(s, BREAK_SEQUENCE, space)


def works(seqs: Iterable[Iterable[Step]], space: FsSpace) -> bool:
    """w(S1, ..., Sk): some filesystem is broken by none of the sequences"""
    results = [space.outcomes(s) for s in seqs]
    return any(
        not any(outcome[index].is_broken for outcome in results)
        for index in range(len(space.filesystems))
    )


def works_conditional(
    consequents: Iterable[Iterable[Step]],
    conditions: Iterable[Iterable[Step]],
    space: FsSpace,
) -> bool:
    """w(consequents | conditions): consequents work wherever every condition works"""
    then = [space.outcomes(s) for s in consequents]
    given = [space.outcomes(s) for s in conditions]
    for index in range(len(space.filesystems)):
        if any(outcome[index].is_broken for outcome in given):
            continue
        if any(outcome[index].is_broken for outcome in then):
            return False
    return True


def type_equal(fs1: Filesystem, fs2: Filesystem) -> bool:
    """Both Broken, or the same type at every node"""
    if fs1.is_broken or fs2.is_broken:
        return fs1.is_broken and fs2.is_broken
    nodes = fs1.nodes() | fs2.nodes()
    return all(fs1.tag_at(node) is fs2.tag_at(node) for node in nodes)


def semantic_independent(c1: Command, c2: Command, space: FsSpace) -> bool:
    """Same effect in either order, and not equivalent to Break"""
    return equivalent((c1, c2), (c2, c1), space) and not breaks_everything((c1, c2), space)


def _single_equivalent(c1: Command, c2: Command, space: FsSpace) -> Optional[Command]:
    candidates = [c for c in space.commands if c.node == c1.node or c.node == c2.node]
    return next((c for c in candidates if equivalent((c1, c2), (c,), space)), None)


def semantic_class(c1: Command, c2: Command, space: FsSpace) -> PairClass:
    """
    Classify c1·c2 from observed behaviour alone

    Only the node relation is read from the commands; every other distinction
    comes from outcomes over the space. Patterns the rule table does not name
    are labelled ORDERED_ONLY_THIS_WAY.
    """
    relation = fine_relation(c1.node, c2.node)
    forward, backward = (c1, c2), (c2, c1)
    commute = equivalent(forward, backward, space)

    if breaks_everything(forward, space):
        return PairClass(PairKind.BREAKS_ALWAYS)

    if relation is Relation.INCOMPARABLE:
        if commute:
            return PairClass(PairKind.COMMUTE_INCOMPARABLE)
        return PairClass(PairKind.ORDERED_ONLY_THIS_WAY)

    if relation is Relation.EQUAL:
        if extends(forward, (), space) and c1.input is not TypeTag.FILE:
            return PairClass(PairKind.SIMPLIFIES_TO_EMPTY)
        merged = _single_equivalent(c1, c2, space)
        if merged is not None:
            return PairClass(PairKind.SIMPLIFIES_TO_SINGLE, merged)
        return PairClass(PairKind.ORDERED_ONLY_THIS_WAY)

    if commute and (c1.is_assertion or c2.is_assertion):
        survivor = next(
            (c for c in (c1, c2) if equivalent(forward, (c,), space)),
            None,
        )
        return PairClass(PairKind.ASSERTION_ABSORBED, survivor)

    if breaks_everything(backward, space):
        if relation is Relation.PARENT:
            return PairClass(PairKind.CONSTRUCTION_PAIR)
        if relation is Relation.CHILD:
            return PairClass(PairKind.DESTRUCTION_PAIR)
    return PairClass(PairKind.ORDERED_ONLY_THIS_WAY)
