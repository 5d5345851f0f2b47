"""The three-type value domain"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from src.config import HASH_ALGORITHM


class TypeTag(str, Enum):
    """Type of a value: empty (b), file (f) or directory (d)"""
    EMPTY = "b"
    FILE = "f"
    DIRECTORY = "d"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True)
class ContentId:
    """Identity of file content: algorithm tag, digest and byte length"""

    algorithm: str
    digest: str
    size: int

    @classmethod
    def of_bytes(cls, data: bytes, algorithm: str = HASH_ALGORITHM) -> ContentId:
        return cls(algorithm, hashlib.new(algorithm, data).hexdigest(), len(data))

    @property
    def token(self) -> str:
        return f"{self.algorithm}:{self.digest}"

    def __str__(self) -> str:
        return f"{self.token} {self.size}"


@dataclass(frozen=True, slots=True)
class Value:
    """
    A value stored at a node

    Empty and Directory carry no payload, so each has exactly one value.
    Files compare by content identity.
    """

    tag: TypeTag
    content: Optional[ContentId] = None

    def __post_init__(self):
        if self.tag is TypeTag.FILE and self.content is None:
            raise ValueError("a file value needs a content identity")
        if self.tag is not TypeTag.FILE and self.content is not None:
            raise ValueError(f"{self.tag} values carry no content")

    @classmethod
    def file(cls, content: ContentId) -> Value:
        return cls(TypeTag.FILE, content)

    @property
    def is_empty(self) -> bool:
        return self.tag is TypeTag.EMPTY

    @property
    def is_directory(self) -> bool:
        return self.tag is TypeTag.DIRECTORY

    @property
    def is_file(self) -> bool:
        return self.tag is TypeTag.FILE

    def __str__(self) -> str:
        if self.content is None:
            return self.tag.value
        return f"f[{self.content.digest[:8]}]"


EMPTY = Value(TypeTag.EMPTY)
DIRECTORY = Value(TypeTag.DIRECTORY)

# Inverses only need some value of type f; this one is never written to disk
PLACEHOLDER_FILE = Value.file(ContentId("placeholder", "0" * 8, 0))


def canonical_value(tag: TypeTag) -> Value:
    """Representative value of a type (the placeholder for files)"""
    if tag is TypeTag.EMPTY:
        return EMPTY
    if tag is TypeTag.DIRECTORY:
        return DIRECTORY
    return PLACEHOLDER_FILE
