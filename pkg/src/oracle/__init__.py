"""Small-scope semantic oracle: enumerate filesystems and decide relations by brute force"""
from .space import FsSpace, command_universe, enumerate_filesystems, file_value
from .relations import (
    breaks_everything,
    equivalent,
    extends,
    semantic_class,
    semantic_independent,
    type_equal,
    works,
    works_conditional,
)
from .rules import RULE_IDS, check_orderset, simple_sets, verify_rules

__all__ = [
    "FsSpace",
    "command_universe",
    "enumerate_filesystems",
    "file_value",
    "breaks_everything",
    "equivalent",
    "extends",
    "semantic_class",
    "semantic_independent",
    "type_equal",
    "works",
    "works_conditional",
    "RULE_IDS",
    "check_orderset",
    "simple_sets",
    "verify_rules",
]
