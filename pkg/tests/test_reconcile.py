"""Unit tests for reconciliation, dirty marks and maximality"""

import pytest

from src.detect import detect
from src.errors import NotExcluded, NotSimple
from src.model import NodePath, apply_sequence
from src.oracle import FsSpace
from src.reconcile import (
    ConflictKind,
    ConflictPair,
    DirtySet,
    MaximalityKind,
    dirty_marks,
    maximality_witness,
    reconcile,
    state_based_conflicts,
)
from tests.conftest import cmd, fs


def _nodes(*paths):
    return frozenset(NodePath.parse(p) for p in paths)


class TestReconcile:
    """Test reconcile"""

    def test_delete_delete(self):
        """Test A removes /a and its child, B only the child"""
        # Arrange
        a = [cmd("fb", "/a/x"), cmd("db", "/a")]
        b = [cmd("fb", "/a/x")]

        # Act
        plan = reconcile(a, b)

        # Assert
        assert plan.to_b == (cmd("db", "/a"),)
        assert plan.to_a == ()
        assert plan.conflicts == ()
        assert plan.a_intersect_b == {cmd("fb", "/a/x")}

    def test_identical_updates(self, f1):
        """Test a = b propagates nothing"""
        a = [cmd("bd", "/a"), cmd("bf", "/a/x", f1)]
        plan = reconcile(a, list(a))

        assert plan.to_b == () and plan.to_a == ()
        assert not plan.has_conflicts

    def test_same_node_conflict(self, f1, f2):
        """Test concurrent edits of one file"""
        # Act
        plan = reconcile([cmd("ff", "/a", f1)], [cmd("ff", "/a", f2)])

        # Assert
        assert plan.to_b == () and plan.to_a == ()
        assert plan.conflicts == (
            ConflictPair(
                cmd("ff", "/a", f1),
                cmd("ff", "/a", f2),
                NodePath.parse("/a"),
                ConflictKind.SAME_NODE_DIFFERENT_VALUE,
            ),
        )
        assert plan.conflict_nodes == _nodes("/a")
        assert plan.excluded_from_a() == [cmd("ff", "/a", f1)]
        assert plan.excluded_from_b() == [cmd("ff", "/a", f2)]

    def test_independent_updates(self, f1, f2):
        """Test updates on different subtrees both propagate"""
        plan = reconcile([cmd("bd", "/a"), cmd("bf", "/a/x", f1)], [cmd("bf", "/b", f2)])

        assert plan.to_b == (cmd("bd", "/a"), cmd("bf", "/a/x", f1))
        assert plan.to_a == (cmd("bf", "/b", f2),)
        assert plan.conflicts == ()

    def test_related_conflict(self, f1):
        """Test A deletes a folder in which B edits a file"""
        # Arrange
        a = [cmd("fb", "/a/x"), cmd("db", "/a"), cmd("fb", "/b")]
        b = [cmd("ff", "/a/x", f1)]

        # Act
        plan = reconcile(a, b)

        # Assert
        assert plan.to_b == (cmd("fb", "/b"),)
        assert plan.to_a == ()
        kinds = {(str(p.from_a), p.kind) for p in plan.conflicts}
        assert kinds == {
            ("fb(/a/x)", ConflictKind.SAME_NODE_DIFFERENT_VALUE),
            ("db(/a)", ConflictKind.RELATED_NODES),
        }
        related = next(p for p in plan.conflicts if p.kind is ConflictKind.RELATED_NODES)
        assert related.node_witness == NodePath.parse("/a")

    def test_symmetric_conflicts(self, f1, f2):
        """Test swapping the replicas swaps the pair sides"""
        a = [cmd("bd", "/a"), cmd("bf", "/a/x", f1)]
        b = [cmd("bf", "/a", f2)]

        forward = {pair.swapped() for pair in reconcile(a, b).conflicts}
        backward = set(reconcile(b, a).conflicts)

        assert forward == backward
        assert len(forward) == 2

    def test_rejects_non_simple(self, f1):
        """Test inputs with assertions or repeated nodes"""
        with pytest.raises(NotSimple):
            reconcile([cmd("dd", "/a")], [])
        with pytest.raises(NotSimple):
            reconcile([], [cmd("bf", "/a", f1), cmd("fb", "/a")])

    def test_propagation_converges(self, d, f1, f2):
        """Test both replicas end up equal when nothing conflicts"""
        # Arrange
        base = fs(a=d, a__x=f1, b=f1)
        replica_a = fs(a=d, a__x=f2, b=f1, c=d)
        replica_b = fs(a=d, a__x=f1)
        update_a = detect(base, replica_a).commands
        update_b = detect(base, replica_b).commands

        # Act
        plan = reconcile(update_a, update_b)
        synced_a = apply_sequence(replica_a, plan.to_a)
        synced_b = apply_sequence(replica_b, plan.to_b)

        # Assert
        assert not plan.has_conflicts
        assert synced_a == synced_b == fs(a=d, a__x=f2, c=d)


class TestDirtyMarks:
    """Test dirty_marks"""

    def test_no_changes(self, d):
        """Test identical snapshots"""
        assert len(dirty_marks(fs(a=d), fs(a=d))) == 0

    def test_nested_change(self, d, f1, f2):
        """Test a change marks the node and its ancestors"""
        marks = dirty_marks(fs(a=d, a__x=f1), fs(a=d, a__x=f2))
        assert marks.nodes == _nodes("/a/x", "/a")
        assert NodePath.parse("/a") in marks

    def test_root_change(self, f1):
        """Test a root change marks only the root"""
        assert dirty_marks(fs(), fs(a=f1)).nodes == _nodes("/a")


class TestStateBasedConflicts:
    """Test state_based_conflicts"""

    def test_delete_delete(self, d, f1):
        """Test A deletes /a and its child while B deletes only the child"""
        # Arrange
        base = fs(a=d, a__x=f1)
        replica_a = fs()
        replica_b = fs(a=d)

        # Act
        conflicts = state_based_conflicts(
            replica_a,
            replica_b,
            dirty_marks(base, replica_a),
            dirty_marks(base, replica_b),
        )

        # Assert
        assert conflicts == _nodes("/a")
        plan = reconcile(detect(base, replica_a).commands, detect(base, replica_b).commands)
        assert plan.conflicts == ()

    def test_identical_replicas(self, d, f1):
        """Test equal replicas never conflict"""
        replica = fs(a=d, a__x=f1)
        dirty = DirtySet(_nodes("/a", "/a/x"))
        assert state_based_conflicts(replica, replica, dirty, dirty) == frozenset()

    def test_both_created_directory(self, d):
        """Test directories on both sides are not a conflict"""
        dirty = DirtySet(_nodes("/a"))
        assert state_based_conflicts(fs(a=d), fs(a=d), dirty, dirty) == frozenset()


class TestMaximalityWitness:
    """Test maximality_witness"""

    def test_breaks_replica(self, f1, f2):
        """Test creating a file over a file B created breaks"""
        verdict = maximality_witness(
            [cmd("bf", "/a", f1)], [cmd("bf", "/a", f2)], cmd("bf", "/a", f1)
        )
        assert verdict.kind is MaximalityKind.BREAKS_REPLICA

    def test_overrides(self, f1, f2):
        """Test overwriting B's edit of the same file"""
        verdict = maximality_witness(
            [cmd("ff", "/a", f1)], [cmd("ff", "/a", f2)], cmd("ff", "/a", f1)
        )
        assert verdict.kind is MaximalityKind.OVERRIDES
        assert verdict.node == NodePath.parse("/a")

    def test_dependent_construction(self, f1, f2):
        """Test every withheld command of a construction breaks replica B"""
        a = [cmd("bd", "/a"), cmd("bf", "/a/x", f1)]
        b = [cmd("bf", "/a", f2)]

        for extra in a:
            assert maximality_witness(a, b, extra).kind is MaximalityKind.BREAKS_REPLICA

    def test_explicit_space(self, pair_space, f1, f2):
        """Test quantifying over a given space"""
        verdict = maximality_witness(
            [cmd("fb", "/a")], [cmd("ff", "/a", f2)], cmd("fb", "/a"), space=pair_space
        )
        assert verdict.kind is MaximalityKind.OVERRIDES

    def test_not_excluded(self, f1, f2):
        """Test commands that were propagated or never in A∖B"""
        a = [cmd("bf", "/a", f1)]
        b = [cmd("bf", "/b", f2)]
        with pytest.raises(NotExcluded, match="propagated"):
            maximality_witness(a, b, cmd("bf", "/a", f1))
        with pytest.raises(NotExcluded, match="not a command"):
            maximality_witness(a, b, cmd("bf", "/b", f2))

    def test_prefix_overrides_b(self, f1, f2):
        """Test a prefix command that overwrites B's edit before the withheld removal"""
        # Arrange
        a = [cmd("fb", "/a/x"), cmd("db", "/a")]
        b = [cmd("ff", "/a/x", f2)]
        space = FsSpace.of(["/a/x"], [f1, f2])

        # Act
        verdict = maximality_witness(
            a, b, cmd("db", "/a"), space=space, prefix=[cmd("fb", "/a/x")]
        )

        # Assert
        assert verdict.kind is MaximalityKind.OVERRIDES
        assert verdict.node == NodePath.parse("/a/x")

    def test_every_prefix_of_a_minus_b(self, f1, f2):
        """Test each subset of A∖B in front of each withheld command"""
        a = [cmd("fb", "/a/x"), cmd("db", "/a")]
        b = [cmd("ff", "/a/x", f2)]
        space = FsSpace.of(["/a/x"], [f1, f2])

        fb, db = a
        expected = {
            (fb, ()): MaximalityKind.OVERRIDES,
            (fb, (db,)): MaximalityKind.BREAKS_REPLICA,
            (db, ()): MaximalityKind.BREAKS_REPLICA,
            (db, (fb,)): MaximalityKind.OVERRIDES,
        }

        for (extra, prefix), kind in expected.items():
            verdict = maximality_witness(a, b, extra, space=space, prefix=prefix)
            assert verdict.kind is kind

    def test_prefix_must_come_from_a_minus_b(self, f1):
        """Test a prefix with foreign commands or the withheld command itself"""
        a = [cmd("db", "/a")]
        b = [cmd("bf", "/a/x", f1)]

        with pytest.raises(NotExcluded, match="prefix"):
            maximality_witness(a, b, cmd("db", "/a"), prefix=[cmd("fb", "/a/x")])
        with pytest.raises(ValueError, match="already contains"):
            maximality_witness(a, b, cmd("db", "/a"), prefix=[cmd("db", "/a")])
