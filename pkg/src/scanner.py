"""Directory scanning: turn a real directory tree into a snapshot"""
import hashlib
import os
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from src.config import HASH_ALGORITHM
from src.errors import ScanError
from src.model import ContentId, NodePath
from src.models import EntryKind, ScanOptions, Snapshot, SnapshotEntry, SymlinkPolicy


def hash_file(path: Union[str, Path], chunk_size: int) -> ContentId:
    """Content identity of a regular file, read in chunks"""
    digest = hashlib.new(HASH_ALGORITHM)
    size = 0
    with open(path, "rb") as f:
        for block in iter(lambda: f.read(chunk_size), b""):
            digest.update(block)
            size += len(block)
    return ContentId(HASH_ALGORITHM, digest.hexdigest(), size)


def hash_link(path: Union[str, Path]) -> ContentId:
    """Content identity of a symlink: the bytes of its target"""
    return ContentId.of_bytes(os.fsencode(os.readlink(path)))


def _display(path: Union[str, Path]) -> str:
    """Printable form of a path whose name may not decode"""
    return os.fsencode(path).decode("utf-8", "backslashreplace")


def _is_utf8(name: str) -> bool:
    try:
        os.fsencode(name).decode("utf-8")
    except UnicodeDecodeError:
        return False
    return True


class _Walk:
    """Entries found under a root, with the failures met on the way"""

    def __init__(self, root: Path, options: ScanOptions):
        self.root = root
        self.options = options
        self.directories: List[NodePath] = []
        self.files: List[Tuple[NodePath, Path]] = []
        self.links: List[Tuple[NodePath, Path]] = []
        self.failures: List[str] = []
        self.skipped = 0

    def run(self) -> "_Walk":
        self._visit(self.root, ())
        return self

    def _visit(self, directory: Path, prefix: Tuple[str, ...]) -> None:
        try:
            with os.scandir(directory) as it:
                entries = sorted(it, key=lambda e: e.name)
        except OSError as e:
            self.failures.append(f"{_display(directory)}: {e.strerror or e}")
            return

        for entry in entries:
            if not _is_utf8(entry.name):
                self.failures.append(f"{_display(entry.path)}: name is not valid UTF-8")
                continue
            node = NodePath(prefix + (entry.name,))
            path = Path(entry.path)
            try:
                if entry.is_symlink():
                    if self.options.symlinks is SymlinkPolicy.SKIP:
                        self.skipped += 1
                    else:
                        self.links.append((node, path))
                elif entry.is_dir(follow_symlinks=False):
                    self.directories.append(node)
                    self._visit(path, node.segments)
                elif entry.is_file(follow_symlinks=False):
                    self.files.append((node, path))
                else:
                    self.skipped += 1
                    print(f"⚠ Skipping special file: {path}")
            except OSError as e:
                self.failures.append(f"{_display(path)}: {e.strerror or e}")

    def contents(self) -> Dict[NodePath, Tuple[ContentId, Path, bool]]:
        """Hash every file and link, in parallel; the flag marks symlinks"""
        results: Dict[NodePath, Tuple[ContentId, Path, bool]] = {}

        def measure(item: Tuple[NodePath, Path, bool]):
            node, path, is_link = item
            try:
                content = hash_link(path) if is_link else hash_file(path, self.options.chunk_size)
                return node, path, is_link, content, None
            except OSError as e:
                return node, path, is_link, None, f"{_display(path)}: {e.strerror or e}"

        work = [(n, p, False) for n, p in self.files] + [(n, p, True) for n, p in self.links]
        with ThreadPoolExecutor(max_workers=self.options.threads) as pool:
            for node, path, is_link, content, failure in pool.map(measure, work):
                if failure:
                    self.failures.append(failure)
                else:
                    results[node] = (content, path, is_link)
        return results


def _walk(root: Union[str, Path], options: Optional[ScanOptions]) -> Tuple[_Walk, Dict]:
    root = Path(root)
    if not root.is_dir():
        raise ScanError(f"not a directory: {_display(root)}", [_display(root)])
    walk = _Walk(root, options or ScanOptions()).run()
    contents = walk.contents()
    if walk.failures:
        raise ScanError(f"{len(walk.failures)} entries could not be read", walk.failures)
    return walk, contents


def scan(root: Union[str, Path], options: Optional[ScanOptions] = None) -> Snapshot:
    """
    Snapshot a directory tree

    The root directory itself is the context of the forest: its children are
    the roots. Regular files are hashed, directories recorded, symlinks handled
    per options.symlinks and special files skipped with a warning.

    Args:
        root: Directory to scan
        options: Scan options; defaults come from configuration

    Returns:
        Snapshot of every non-empty node

    Raises:
        ScanError: root is not a directory, or some entries could not be read
    """
    walk, contents = _walk(root, options)
    entries = [
        SnapshotEntry(path=str(node), kind=EntryKind.DIRECTORY) for node in walk.directories
    ]
    for node, (content, _, _) in contents.items():
        entries.append(
            SnapshotEntry(
                path=str(node), kind=EntryKind.FILE, digest=content.digest, size=content.size
            )
        )
    entries.sort(key=lambda entry: entry.node)
    return Snapshot(entries=entries)


def index_blobs(
    root: Union[str, Path], options: Optional[ScanOptions] = None
) -> Dict[ContentId, Path]:
    """
    Map every content identity found under root to one path providing it

    Regular files win over symlinks with the same identity, so a symlink is
    only recreated when no regular file provides the bytes.
    """
    _, contents = _walk(root, options)
    index: Dict[ContentId, Path] = {}
    for node in sorted(contents, key=lambda n: (contents[n][2], n.segments)):
        content, path, _ = contents[node]
        index.setdefault(content, path)
    return index
