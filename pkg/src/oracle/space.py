"""Finite filesystem spaces the oracle quantifies over"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from src.config import VERIFY_CHAIN, VERIFY_FILE_VALUES, VERIFY_ROOTS
from src.model import (
    BREAK,
    COMMAND_CODES,
    DIRECTORY,
    EMPTY,
    Command,
    ContentId,
    Filesystem,
    NodeForest,
    NodePath,
    Step,
    TypeTag,
    Value,
    apply_sequence,
)

CHAIN_NAMES = "axyzuvw"
ROOT_NAMES = "bcdeghk"


def file_value(label: str) -> Value:
    """Deterministic file value whose content is the label itself"""
    return Value.file(ContentId.of_bytes(label.encode()))


@dataclass(frozen=True)
class FsSpace:
    """
    Every tree-property-respecting filesystem over a forest and value alphabet

    Quantifiers over "all filesystems" are evaluated over this space only.
    Sequence outcomes are memoised per space.
    """

    forest: NodeForest
    alphabet: Tuple[Value, ...]
    _outcomes: Dict[Tuple[Step, ...], Tuple[Filesystem, ...]] = field(
        default_factory=dict, init=False, compare=False, hash=False, repr=False
    )

    def __post_init__(self):
        if not len(self.forest):
            raise ValueError("a filesystem space needs at least one node")
        if EMPTY not in self.alphabet or DIRECTORY not in self.alphabet:
            raise ValueError("the alphabet must contain Empty and Directory")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("the alphabet has duplicate values")

    @classmethod
    def default(
        cls,
        chain: int = VERIFY_CHAIN,
        roots: int = VERIFY_ROOTS,
        file_values: int = VERIFY_FILE_VALUES,
    ) -> FsSpace:
        """
        Chain /a, /a/x, /a/x/y... plus extra roots /b, /c..., files f1, f2...

        Args:
            chain: Length of the ancestor chain under /a (at least 1)
            roots: Number of additional incomparable roots
            file_values: Number of distinct file values

        Returns:
            The space
        """
        if chain < 1 or chain > len(CHAIN_NAMES):
            raise ValueError(f"chain length must be between 1 and {len(CHAIN_NAMES)}")
        if roots < 0 or roots > len(ROOT_NAMES):
            raise ValueError(f"extra roots must be between 0 and {len(ROOT_NAMES)}")
        paths = ["/" + "/".join(CHAIN_NAMES[:chain])]
        paths += [f"/{name}" for name in ROOT_NAMES[:roots]]
        return cls.of(paths, [file_value(f"f{i}") for i in range(1, file_values + 1)])

    @classmethod
    def of(cls, paths: Iterable, files: Sequence[Value]) -> FsSpace:
        """Closure of the paths with alphabet Empty, Directory and the files"""
        alphabet = (EMPTY, DIRECTORY) + tuple(dict.fromkeys(files))
        return cls(NodeForest.closure(paths), alphabet)

    @classmethod
    def covering(cls, steps: Iterable[Step], file_values: int = 1) -> FsSpace:
        """
        Smallest space mentioning every node and file value of the commands

        `file_values` generic file values are added so that files other than
        the mentioned ones also occur.
        """
        commands = [step for step in steps if step is not BREAK]
        if not commands:
            raise ValueError("cannot build a space from an empty command list")
        files = [command.value for command in commands if command.value.is_file]
        files += [file_value(f"f{i}") for i in range(1, file_values + 1)]
        return cls.of([command.node for command in commands], files)

    @property
    def file_values(self) -> List[Value]:
        return [value for value in self.alphabet if value.is_file]

    def _subtrees(self, node: NodePath) -> List[Dict[NodePath, Value]]:
        options = []
        for value in self.alphabet:
            if not value.is_directory:
                options.append({node: value})
                continue
            below = [self._subtrees(child) for child in self.forest.children(node)]
            for combination in product(*below):
                assignment = {node: value}
                for part in combination:
                    assignment.update(part)
                options.append(assignment)
        return options

    def enumerate(self) -> Iterator[Filesystem]:
        """Yield every member in a deterministic order"""
        per_root = [self._subtrees(root) for root in self.forest.roots()]
        for combination in product(*per_root):
            values: Dict[NodePath, Value] = {}
            for part in combination:
                values.update(part)
            yield Filesystem(values)

    @cached_property
    def filesystems(self) -> Tuple[Filesystem, ...]:
        return tuple(self.enumerate())

    @cached_property
    def commands(self) -> Tuple[Command, ...]:
        """Every regular command over the forest and alphabet"""
        universe = []
        for node in self.forest:
            for code in sorted(COMMAND_CODES):
                if TypeTag(code[1]) is TypeTag.FILE:
                    universe.extend(Command.of(code, node, value) for value in self.file_values)
                else:
                    universe.append(Command.of(code, node))
        return tuple(universe)

    def outcomes(self, steps: Iterable[Step]) -> Tuple[Filesystem, ...]:
        """Result of the sequence on every member, in enumeration order"""
        key = tuple(steps)
        cached = self._outcomes.get(key)
        if cached is None:
            cached = tuple(apply_sequence(fs, key) for fs in self.filesystems)
            self._outcomes[key] = cached
        return cached

    def __len__(self) -> int:
        return len(self.filesystems)

    def describe(self) -> str:
        nodes = ", ".join(str(node) for node in self.forest)
        return f"{len(self.forest)} nodes ({nodes}), {len(self.file_values)} file values"


def enumerate_filesystems(space: FsSpace) -> Iterator[Filesystem]:
    return space.enumerate()


def command_universe(space: FsSpace) -> Tuple[Command, ...]:
    return space.commands
