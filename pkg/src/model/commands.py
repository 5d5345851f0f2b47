"""Commands, the Break pseudo-command and command sequences"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple, Union

from src.model.paths import NodePath, as_node
from src.model.values import DIRECTORY, EMPTY, TypeTag, Value

ASSERTION_CODES = frozenset({"bb", "dd"})
COMMAND_CODES = frozenset(x + y for x in "bfd" for y in "bfd")


@dataclass(frozen=True, slots=True)
class Command:
    """
    A regular command XY(n, v)

    Requires the current value at `node` to have type `input`, then stores
    `value` (of type `output`) there.
    """

    input: TypeTag
    output: TypeTag
    node: NodePath
    value: Value

    def __post_init__(self):
        if self.value.tag is not self.output:
            raise ValueError(f"value {self.value} does not have output type {self.output}")

    @classmethod
    def of(
        cls,
        code: str,
        node: Union[NodePath, str],
        value: Optional[Value] = None,
    ) -> Command:
        """
        Build a command from its two-letter code

        Args:
            code: Input and output tags, e.g. "bf" or "db"
            node: Target node or its textual form
            value: Output value; required when the output type is f

        Returns:
            The command
        """
        if code not in COMMAND_CODES:
            raise ValueError(f"unknown command code: {code!r}")
        output = TypeTag(code[1])
        if value is None:
            if output is TypeTag.FILE:
                raise ValueError(f"command {code} needs a file value")
            value = EMPTY if output is TypeTag.EMPTY else DIRECTORY
        return cls(TypeTag(code[0]), output, as_node(node), value)

    @property
    def code(self) -> str:
        return f"{self.input.value}{self.output.value}"

    @property
    def is_assertion(self) -> bool:
        return self.code in ASSERTION_CODES

    def sort_key(self) -> Tuple:
        content = self.value.content
        return (self.node.segments, self.code, "" if content is None else str(content))

    def __str__(self) -> str:
        if self.output is TypeTag.FILE:
            return f"{self.code}({self.node}, {self.value})"
        return f"{self.code}({self.node})"


class BreakCommand:
    """The pseudo-command that breaks every filesystem"""

    _instance: Optional[BreakCommand] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "BREAK"

    __str__ = __repr__


BREAK = BreakCommand()

Step = Union[Command, BreakCommand]
CommandSequence = Tuple[Step, ...]

EMPTY_SEQUENCE: CommandSequence = ()
BREAK_SEQUENCE: CommandSequence = (BREAK,)


def as_sequence(steps: Iterable[Step]) -> CommandSequence:
    """Freeze any iterable of commands into a sequence"""
    return tuple(steps)


def sorted_commands(commands: Iterable[Command]) -> list[Command]:
    """Deterministic order for unordered command sets"""
    return sorted(commands, key=Command.sort_key)


def format_sequence(steps: Iterable[Step]) -> str:
    text = " · ".join(str(step) for step in steps)
    return text or "ε"
