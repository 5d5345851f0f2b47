"""
Brute-force verification of the command-pair rules

Each rule is instantiated over every command (or command pair) of the space
matching its side conditions and checked by enumeration. A rule with no
instantiation in the space is reported as not covered.
"""
from itertools import combinations, permutations
from typing import Callable, Dict, Iterator, List, Tuple

from src.algebra import (
    CONSTRUCTION_PAIRS,
    DESTRUCTION_PAIRS,
    PairClass,
    Relation,
    classify_pair,
    fine_relation,
    independent,
)
from src.errors import NoValidOrder
from src.model import BREAK_SEQUENCE, Command, TypeTag
from src.models.reports import RuleReport, RuleResult
from src.oracle.relations import (
    breaks_everything,
    equivalent,
    extends,
    semantic_class,
    semantic_independent,
    works,
    works_conditional,
)
from src.oracle.space import FsSpace
from src.ordering import enumerate_orders, order_canonical

Classifier = Callable[[Command, Command], PairClass]
Independence = Callable[[Command, Command], bool]

RULE_IDS = tuple(str(number) for number in range(1, 13)) + (
    "incomparable",
    "table",
    "independence",
    "construction",
    "destruction",
)
MAX_EXAMPLES = 5


class _Tally:
    def __init__(self, rule: str):
        self.rule = rule
        self.instantiations = 0
        self.examples: List[str] = []
        self.failures = 0

    def check(self, holds: bool, instance: str) -> None:
        self.instantiations += 1
        if not holds:
            self.failures += 1
            if len(self.examples) < MAX_EXAMPLES:
                self.examples.append(instance)

    def result(self) -> RuleResult:
        return RuleResult(
            rule=self.rule,
            instantiations=self.instantiations,
            failures=self.failures,
            examples=self.examples,
        )


def _pairs(space: FsSpace) -> Iterator[Tuple[Command, Command, Relation]]:
    for c1 in space.commands:
        for c2 in space.commands:
            yield c1, c2, fine_relation(c1.node, c2.node)


def _check_pair_rules(
    c1: Command, c2: Command, relation: Relation, space: FsSpace, t: Dict[str, _Tally]
) -> None:
    forward, backward = (c1, c2), (c2, c1)
    instance = f"{c1} · {c2}"

    if relation is Relation.INCOMPARABLE:
        t["1"].check(equivalent(forward, backward, space), instance)
        t["2"].check(not breaks_everything(forward, space), instance)

    elif relation is Relation.EQUAL:
        if c1.output is not c2.input:
            t["3"].check(breaks_everything(forward, space), instance)
        elif c1.input is c2.output and c1.input is not TypeTag.FILE:
            t["4"].check(extends(forward, (), space), instance)
        else:
            merged = Command(c1.input, c2.output, c1.node, c2.value)
            t["5"].check(equivalent(forward, (merged,), space), instance)

    elif relation is Relation.DISTANT_ANCESTOR:
        if c1.code != "dd" and c2.code != "bb":
            holds = breaks_everything(forward, space) and breaks_everything(backward, space)
            t["6"].check(holds, instance)

    elif relation is Relation.PARENT:
        if c1.code != "dd" and c2.code != "bb":
            if (c1.code, c2.code) in CONSTRUCTION_PAIRS:
                holds = works([forward], space) and breaks_everything(backward, space)
                t["construction"].check(holds, instance)
            else:
                t["7"].check(breaks_everything(forward, space), instance)

    elif relation is Relation.CHILD:
        if c1.code != "bb" and c2.code != "dd":
            if (c1.code, c2.code) in DESTRUCTION_PAIRS:
                holds = works([forward], space) and breaks_everything(backward, space)
                t["destruction"].check(holds, instance)
            else:
                t["8"].check(breaks_everything(forward, space), instance)

    if relation in (Relation.CHILD, Relation.DISTANT_DESCENDANT):
        # c1 on the descendant
        if c1.code == "bb" and c2.code != "dd":
            holds = equivalent(forward, (c2,), space) and equivalent(backward, (c2,), space)
            t["9"].check(holds, instance)
    if relation in (Relation.PARENT, Relation.DISTANT_ANCESTOR):
        if c1.code == "dd" and c2.code != "bb":
            holds = equivalent(forward, (c2,), space) and equivalent(backward, (c2,), space)
            t["10"].check(holds, instance)


def verify_rules(
    space: FsSpace,
    classifier: Classifier = classify_pair,
    independence: Independence = independent,
) -> RuleReport:
    """
    Check every rule, the incomparable-independence law and the pair tables over a space

    Args:
        space: Space with at least two file values
        classifier: Pair table under test
        independence: Independence table under test

    Returns:
        One result per rule; the report is ok when nothing failed and every
        rule had at least one instantiation
    """
    if len(space.file_values) < 2:
        raise ValueError("rule verification needs at least two file values")
    t = {rule: _Tally(rule) for rule in RULE_IDS}

    for command in space.commands:
        if command.is_assertion:
            t["11"].check(extends((command,), (), space), str(command))

    for c1, c2, relation in _pairs(space):
        _check_pair_rules(c1, c2, relation, space, t)
        instance = f"{c1} · {c2}"

        expected = semantic_independent(c1, c2, space)
        t["independence"].check(independence(c1, c2) == expected, instance)
        t["table"].check(classifier(c1, c2) == semantic_class(c1, c2, space), instance)

        if independence(c1, c2):
            holds = works_conditional([(c1, c2)], [(c1,), (c2,)], space)
            t["12"].check(holds, instance)
        if c1 != c2 and not c1.is_assertion and not c2.is_assertion:
            incomparable = relation is Relation.INCOMPARABLE
            t["incomparable"].check(expected == incomparable, instance)

    return RuleReport(space=space.describe(), results=[t[rule].result() for rule in RULE_IDS])


def simple_sets(space: FsSpace, max_size: int) -> Iterator[Tuple[Command, ...]]:
    """Every simple command set over the space with at most max_size commands"""
    regular = [command for command in space.commands if not command.is_assertion]
    for size in range(max_size + 1):
        for chosen in combinations(regular, size):
            nodes = {command.node for command in chosen}
            if len(nodes) == size:
                yield chosen


def check_orderset(u: Tuple[Command, ...], space: FsSpace) -> List[str]:
    """
    Exhaustive order check of one simple set

    Every enumerated order must be equivalent to the others, every other
    permutation must break every filesystem, and a set with commands on a
    node and its parent must have an order placing them next to each other.

    Returns:
        Human readable failures, empty when the set behaves
    """
    failures = []
    try:
        orders = enumerate_orders(u)
    except NoValidOrder:
        orders = []

    valid = set(orders)
    if orders:
        canonical = order_canonical(u)
        if canonical not in valid:
            failures.append(f"canonical order {canonical} is not enumerated")
        first = orders[0]
        for other in orders[1:]:
            if not equivalent(first, other, space):
                failures.append(f"orders {first} and {other} differ")

    for permutation in permutations(u):
        if permutation not in valid and not equivalent(permutation, BREAK_SEQUENCE, space):
            failures.append(f"{permutation} is not enumerated but works somewhere")

    for c1, c2 in combinations(u, 2):
        if c1.node.parent == c2.node or c2.node.parent == c1.node:
            adjacent = any(
                abs(order.index(c1) - order.index(c2)) == 1 for order in orders
            )
            if orders and not adjacent:
                failures.append(f"no order places {c1} next to {c2}")
    return failures
