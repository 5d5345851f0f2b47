"""Shared test fixtures for all test modules"""

import pytest
from pathlib import Path
from typing import Dict, Optional, Union

from src.model import DIRECTORY, Command, Filesystem, Value
from src.oracle import FsSpace, file_value


def cmd(code: str, path: str, value: Optional[Value] = None) -> Command:
    """Shorthand for Command.of"""
    return Command.of(code, path, value)


def fs(**values: Value) -> Filesystem:
    """Filesystem from keyword paths: fs(a=DIRECTORY, a__x=f1) is {/a: d, /a/x: f1}"""
    return Filesystem.of({"/" + name.replace("__", "/"): value for name, value in values.items()})


def build_tree(root: Path, layout: Dict[str, Union[bytes, None]]) -> Path:
    """Create directories (None) and files (bytes) under root, parents first"""
    root.mkdir(parents=True, exist_ok=True)
    for relative in sorted(layout):
        target = root / relative
        content = layout[relative]
        if content is None:
            target.mkdir(parents=True, exist_ok=True)
        else:
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_bytes(content)
    return root


@pytest.fixture
def f1():
    """First generic file value"""
    return file_value("f1")


@pytest.fixture
def f2():
    """Second generic file value"""
    return file_value("f2")


@pytest.fixture
def d():
    """The directory value"""
    return DIRECTORY


@pytest.fixture(scope="session")
def default_space():
    """Chain /a, /a/x, /a/x/y plus root /b, alphabet {b, d, f1, f2}"""
    return FsSpace.default(chain=3, roots=1, file_values=2)


@pytest.fixture(scope="session")
def pair_space():
    """Parent /a and child /a/x, alphabet {b, d, f1, f2}"""
    return FsSpace.of(["/a/x"], [file_value("f1"), file_value("f2")])


@pytest.fixture(scope="session")
def chain_space():
    """Chain /a, /a/x, /a/x/y with two file values"""
    return FsSpace.default(chain=3, roots=0, file_values=2)


@pytest.fixture(scope="session")
def small_space():
    """Parent /a, child /a/x and root /b, alphabet {b, d, f1, f2}"""
    return FsSpace.default(chain=2, roots=1, file_values=2)


@pytest.fixture
def replica(tmp_path):
    """Directory tree with one folder, two files and an empty subfolder"""
    return build_tree(
        tmp_path / "replica",
        {
            "docs": None,
            "docs/notes.txt": b"meeting notes\n",
            "docs/empty": None,
            "readme.md": b"# hello\n",
        },
    )
