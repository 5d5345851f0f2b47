"""Core model: namespace forest, values, commands and filesystems"""
from .paths import TOP, NodeForest, NodePath, NodeRelation, Top, as_node, node_relation, parent
from .values import (
    DIRECTORY,
    EMPTY,
    PLACEHOLDER_FILE,
    ContentId,
    TypeTag,
    Value,
    canonical_value,
)
from .commands import (
    ASSERTION_CODES,
    BREAK,
    BREAK_SEQUENCE,
    COMMAND_CODES,
    EMPTY_SEQUENCE,
    BreakCommand,
    Command,
    CommandSequence,
    Step,
    as_sequence,
    format_sequence,
    sorted_commands,
)
from .filesystem import (
    BROKEN,
    Filesystem,
    apply_command,
    apply_sequence,
    check_tree_property,
    first_breaking_step,
)

__all__ = [
    "TOP",
    "Top",
    "NodePath",
    "NodeForest",
    "NodeRelation",
    "as_node",
    "node_relation",
    "parent",
    "DIRECTORY",
    "EMPTY",
    "PLACEHOLDER_FILE",
    "ContentId",
    "TypeTag",
    "Value",
    "canonical_value",
    "ASSERTION_CODES",
    "BREAK",
    "BREAK_SEQUENCE",
    "COMMAND_CODES",
    "EMPTY_SEQUENCE",
    "BreakCommand",
    "Command",
    "CommandSequence",
    "Step",
    "as_sequence",
    "format_sequence",
    "sorted_commands",
    "BROKEN",
    "Filesystem",
    "apply_command",
    "apply_sequence",
    "check_tree_property",
    "first_breaking_step",
]
