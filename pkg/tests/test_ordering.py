"""Unit tests for comparability components and valid orders"""

import pytest

from src.errors import MixedPairs, NoValidOrder, NotSimple
from src.model import NodePath
from src.ordering import (
    ComponentKind,
    components,
    enumerate_orders,
    is_valid_order,
    order_canonical,
    touches_between,
)
from tests.conftest import cmd


class TestComponents:
    """Test components"""

    def test_construction_component(self, f1):
        """Test a related pair forms one construction component"""
        # Act
        parts = components([cmd("bf", "/a/x", f1), cmd("bd", "/a")])

        # Assert
        assert len(parts) == 1
        assert parts[0].kind is ComponentKind.CONSTRUCTION
        assert parts[0].top == cmd("bd", "/a")
        assert parts[0].edges == ((cmd("bd", "/a"), cmd("bf", "/a/x", f1)),)

    def test_incomparable_singletons(self, f1, f2):
        """Test incomparable roots give two singletons"""
        parts = components([cmd("bf", "/a", f1), cmd("bf", "/b", f2)])
        assert [p.kind for p in parts] == [ComponentKind.SINGLETON, ComponentKind.SINGLETON]

    def test_destruction_and_singleton(self, f1):
        """Test a destruction component next to an unrelated singleton"""
        parts = components([cmd("fb", "/a/x"), cmd("db", "/a"), cmd("bf", "/b", f1)])

        assert [p.kind for p in parts] == [ComponentKind.DESTRUCTION, ComponentKind.SINGLETON]
        assert len(parts[0]) == 2

    def test_mixed_pairs(self):
        """Test a component mixing construction and destruction"""
        with pytest.raises(MixedPairs):
            components([cmd("bd", "/a"), cmd("db", "/a/x")])

    def test_gap_has_no_order(self, f1):
        """Test a component skipping an intermediate node"""
        with pytest.raises(NoValidOrder, match="untouched node /a/x"):
            components([cmd("bd", "/a"), cmd("bf", "/a/x/y", f1)])

    def test_requires_simple_set(self, f1):
        """Test assertions and repeated nodes are rejected"""
        with pytest.raises(NotSimple):
            components([cmd("bb", "/a")])
        with pytest.raises(NotSimple):
            components([cmd("bf", "/a", f1), cmd("fb", "/a")])


class TestOrderCanonical:
    """Test order_canonical"""

    def test_construction_topmost_first(self, f1):
        """Test parents precede children"""
        assert order_canonical([cmd("bf", "/a/x", f1), cmd("bd", "/a")]) == (
            cmd("bd", "/a"),
            cmd("bf", "/a/x", f1),
        )

    def test_destruction_topmost_last(self):
        """Test children precede parents"""
        assert order_canonical([cmd("db", "/a"), cmd("fb", "/a/x")]) == (
            cmd("fb", "/a/x"),
            cmd("db", "/a"),
        )

    def test_lexicographic_tie_break(self, f1, f2):
        """Test incomparable commands come in path order"""
        assert order_canonical([cmd("bf", "/b", f2), cmd("bf", "/a", f1)]) == (
            cmd("bf", "/a", f1),
            cmd("bf", "/b", f2),
        )

    def test_no_valid_order(self, f1):
        """Test removing a directory while creating its child"""
        with pytest.raises(NoValidOrder):
            order_canonical([cmd("db", "/a"), cmd("bf", "/a/x", f1)])

    def test_deep_destruction_postorder(self):
        """Test a destruction tree is emitted bottom up, siblings in path order"""
        u = [
            cmd("db", "/a"),
            cmd("db", "/a/x"),
            cmd("fb", "/a/x/y"),
            cmd("fb", "/a/w"),
        ]
        assert order_canonical(u) == (
            cmd("fb", "/a/w"),
            cmd("fb", "/a/x/y"),
            cmd("db", "/a/x"),
            cmd("db", "/a"),
        )

    def test_empty_set(self):
        """Test ε"""
        assert order_canonical([]) == ()


class TestEnumerateOrders:
    """Test enumerate_orders"""

    def test_incomparable_both_orders(self, f1, f2):
        """Test both permutations of incomparable commands"""
        orders = enumerate_orders([cmd("bf", "/a", f1), cmd("bf", "/b", f2)], limit=10)
        assert len(orders) == 2
        assert len(set(orders)) == 2

    def test_related_single_order(self, f1):
        """Test a construction pair has one order"""
        orders = enumerate_orders([cmd("bd", "/a"), cmd("bf", "/a/x", f1)], limit=10)
        assert orders == [(cmd("bd", "/a"), cmd("bf", "/a/x", f1))]

    def test_empty_set(self):
        """Test the empty set yields ε"""
        assert enumerate_orders([], limit=10) == [()]

    def test_interleavings(self, f1, f2):
        """Test components mix: a 2-chain and a singleton give 3 orders"""
        u = [cmd("bd", "/a"), cmd("bf", "/a/x", f1), cmd("bf", "/b", f2)]
        orders = enumerate_orders(u, limit=10)

        assert len(orders) == 3
        for order in orders:
            assert order.index(cmd("bd", "/a")) < order.index(cmd("bf", "/a/x", f1))

    def test_limit(self, f1):
        """Test the limit caps the output"""
        u = [cmd("bf", f"/{name}", f1) for name in "abcd"]
        assert len(enumerate_orders(u, limit=5)) == 5
        assert len(enumerate_orders(u, limit=100)) == 24
        with pytest.raises(ValueError):
            enumerate_orders(u, limit=0)

    def test_canonical_is_enumerated(self, f1):
        """Test the canonical order is one of the enumerated orders"""
        u = [cmd("bd", "/a"), cmd("bd", "/a/x"), cmd("bf", "/a/y", f1), cmd("fb", "/b")]
        assert order_canonical(u) in enumerate_orders(u)


class TestIsValidOrder:
    """Test is_valid_order"""

    def test_valid(self, f1):
        """Test parent first"""
        assert is_valid_order([cmd("bd", "/a"), cmd("bf", "/a/x", f1)])

    def test_reversed(self, f1):
        """Test child first"""
        assert not is_valid_order([cmd("bf", "/a/x", f1), cmd("bd", "/a")])

    def test_empty(self):
        """Test ε is valid"""
        assert is_valid_order([])

    def test_mixed_is_invalid(self, f1):
        """Test a set with no valid order"""
        assert not is_valid_order([cmd("db", "/a"), cmd("bf", "/a/x", f1)])

    def test_not_simple_raises(self):
        """Test non-simple input"""
        with pytest.raises(NotSimple):
            is_valid_order([cmd("dd", "/a")])


class TestTouchesBetween:
    """Test touches_between"""

    def test_connected_chain(self, f1):
        """Test every intermediate node is touched"""
        u = [cmd("bd", "/a"), cmd("bd", "/a/x"), cmd("bf", "/a/x/y", f1)]
        assert touches_between(u, NodePath.parse("/a"), NodePath.parse("/a/x/y"))

    def test_gap(self, f1):
        """Test an untouched intermediate node"""
        u = [cmd("bd", "/a"), cmd("bf", "/a/x/y", f1)]
        assert not touches_between(u, NodePath.parse("/a"), NodePath.parse("/a/x/y"))

    def test_unrelated_nodes(self, f1):
        """Test nodes that are not ancestor and descendant"""
        assert not touches_between([], NodePath.parse("/b"), NodePath.parse("/a/x"))
