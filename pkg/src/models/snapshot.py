"""Snapshot models: the on-disk form of a filesystem"""
from enum import Enum
from pathlib import Path
from typing import List, Optional, Union

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from src.codec import decode_path, encode_path, parse_content
from src.config import HASH_ALGORITHM, HASH_CHUNK_SIZE, HASH_THREADS, SNAPSHOT_HEADER
from src.errors import InputFileError, SnapshotFormatError
from src.model import DIRECTORY, ContentId, Filesystem, NodePath, Value


class EntryKind(str, Enum):
    DIRECTORY = "D"
    FILE = "F"


class SymlinkPolicy(str, Enum):
    HASH_TARGET = "hash-target"
    SKIP = "skip"


class SnapshotEntry(BaseModel):
    """Single snapshot line model"""
    path: str = Field(..., description="Node path in the /a/x form, unencoded")
    kind: EntryKind
    digest: Optional[str] = Field(None, pattern=r"^[0-9a-f]{64}$", description="SHA-256 hex digest")
    size: Optional[int] = Field(None, ge=0, description="Content length in bytes")

    @field_validator("path")
    @classmethod
    def path_is_node(cls, value: str) -> str:
        if not value.startswith("/"):
            raise ValueError("path must start with '/'")
        NodePath(tuple(value[1:].split("/")))
        return value

    @model_validator(mode="after")
    def content_matches_kind(self):
        has_content = self.digest is not None or self.size is not None
        if self.kind is EntryKind.FILE and (self.digest is None or self.size is None):
            raise ValueError(f"file entry {self.path} needs a digest and a size")
        if self.kind is EntryKind.DIRECTORY and has_content:
            raise ValueError(f"directory entry {self.path} carries no content")
        return self

    @property
    def node(self) -> NodePath:
        return NodePath(tuple(self.path[1:].split("/")))

    @property
    def value(self) -> Value:
        if self.kind is EntryKind.DIRECTORY:
            return DIRECTORY
        return Value.file(ContentId(HASH_ALGORITHM, self.digest, self.size))

    def to_line(self) -> str:
        if self.kind is EntryKind.DIRECTORY:
            return f"D {encode_path(self.node)}"
        return f"F {encode_path(self.node)} {HASH_ALGORITHM}:{self.digest} {self.size}"

    @classmethod
    def from_line(cls, line: str) -> "SnapshotEntry":
        parts = line.split(" ")
        if parts[0] == EntryKind.DIRECTORY.value and len(parts) == 2:
            return cls(path=str(decode_path(parts[1])), kind=EntryKind.DIRECTORY)
        if parts[0] == EntryKind.FILE.value and len(parts) == 4:
            content = parse_content(parts[2], parts[3])
            return cls(
                path=str(decode_path(parts[1])),
                kind=EntryKind.FILE,
                digest=content.digest,
                size=content.size,
            )
        raise ValueError(f"expected 'D <path>' or 'F <path> {HASH_ALGORITHM}:<hex> <size>'")


class Snapshot(BaseModel):
    """
    Snapshot model: every non-empty node of a directory tree

    Entries are kept in node order (segment-wise, so a parent precedes its
    children). Every entry's parent is a directory entry; nodes without an
    entry are Empty.
    """
    entries: List[SnapshotEntry] = Field(default_factory=list)

    @model_validator(mode="after")
    def entries_form_a_tree(self):
        nodes = [entry.node for entry in self.entries]
        if nodes != sorted(nodes) or len(set(nodes)) != len(nodes):
            raise ValueError("entries must be unique and sorted by path")
        directories = {entry.node for entry in self.entries if entry.kind is EntryKind.DIRECTORY}
        for node in nodes:
            up = node.parent
            if isinstance(up, NodePath) and up not in directories:
                raise ValueError(f"parent of {node} is not a directory entry")
        return self

    def __len__(self) -> int:
        return len(self.entries)

    def dumps(self) -> str:
        lines = [SNAPSHOT_HEADER] + [entry.to_line() for entry in self.entries]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "Snapshot":
        """
        Parse the text form

        Raises:
            SnapshotFormatError: missing header, malformed line, or entries that
                are unsorted or do not form a tree
        """
        lines = text.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        if not lines or lines[0] != SNAPSHOT_HEADER:
            raise SnapshotFormatError(f"snapshot must start with {SNAPSHOT_HEADER!r}")

        entries = []
        for number, line in enumerate(lines[1:], start=2):
            try:
                entries.append(SnapshotEntry.from_line(line))
            except (ValueError, ValidationError) as e:
                raise SnapshotFormatError(f"line {number}: {e}")
        encoded = [encode_path(entry.node).encode("utf-8") for entry in entries]
        if encoded == sorted(encoded):
            # bytewise path order; stored in node order
            entries.sort(key=lambda entry: entry.node)
        try:
            return cls(entries=entries)
        except ValidationError as e:
            raise SnapshotFormatError(str(e))

    def save(self, path: Union[str, Path]) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8", newline="\n")

    @classmethod
    def load(cls, path: Union[str, Path]) -> "Snapshot":
        try:
            text = Path(path).read_text(encoding="utf-8")
        except UnicodeDecodeError as e:
            raise SnapshotFormatError(f"{path}: not UTF-8 text ({e})")
        except OSError as e:
            raise InputFileError(f"cannot read snapshot {path}: {e.strerror or e}")
        return cls.loads(text)

    def to_filesystem(self) -> Filesystem:
        return Filesystem({entry.node: entry.value for entry in self.entries})

    @classmethod
    def from_filesystem(cls, fs: Filesystem) -> "Snapshot":
        if fs.is_broken:
            raise ValueError("a Broken filesystem has no snapshot")
        entries = []
        for node, value in fs.items():
            if value.is_directory:
                entries.append(SnapshotEntry(path=str(node), kind=EntryKind.DIRECTORY))
            elif value.content.algorithm != HASH_ALGORITHM:
                raise ValueError(f"{node} holds a value without {HASH_ALGORITHM} identity")
            else:
                entries.append(
                    SnapshotEntry(
                        path=str(node),
                        kind=EntryKind.FILE,
                        digest=value.content.digest,
                        size=value.content.size,
                    )
                )
        return cls(entries=entries)


class ScanOptions(BaseModel):
    """Directory scan options"""
    symlinks: SymlinkPolicy = Field(
        SymlinkPolicy.HASH_TARGET, description="hash-target: file whose content is the link target"
    )
    threads: int = Field(HASH_THREADS, ge=1, description="Parallel hashing workers")
    chunk_size: int = Field(HASH_CHUNK_SIZE, ge=1, description="Read size while hashing")
