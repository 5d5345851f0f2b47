"""Unit tests for directory scanning"""

import os
import sys
from unittest.mock import patch

import pytest

from src.errors import ScanError
from src.model import ContentId
from src.models import EntryKind, ScanOptions, SymlinkPolicy
from src.scanner import hash_file, hash_link, index_blobs, scan
from tests.conftest import build_tree

BAD_NAME = os.fsdecode(b"bad\xff")
needs_byte_names = pytest.mark.skipif(
    sys.platform != "linux", reason="needs file names that are arbitrary bytes"
)


class TestHashing:
    """Test content hashing"""

    def test_chunked_hash_matches_whole(self, tmp_path):
        """Test the digest does not depend on the chunk size"""
        path = tmp_path / "data.bin"
        path.write_bytes(b"hello world" * 100)

        assert hash_file(path, 3) == ContentId.of_bytes(b"hello world" * 100)
        assert hash_file(path, 65536).size == 1100

    def test_empty_file(self, tmp_path):
        """Test a zero-length file"""
        path = tmp_path / "empty"
        path.write_bytes(b"")
        assert hash_file(path, 16) == ContentId.of_bytes(b"")

    def test_link_hashes_target(self, tmp_path):
        """Test a symlink is identified by its target text"""
        link = tmp_path / "link"
        os.symlink("docs/notes.txt", link)
        assert hash_link(link) == ContentId.of_bytes(b"docs/notes.txt")


class TestScan:
    """Test scan"""

    def test_scan_tree(self, replica):
        """Test directories and files become sorted entries"""
        # Act
        snap = scan(replica)

        # Assert
        assert [(e.path, e.kind) for e in snap.entries] == [
            ("/docs", EntryKind.DIRECTORY),
            ("/docs/empty", EntryKind.DIRECTORY),
            ("/docs/notes.txt", EntryKind.FILE),
            ("/readme.md", EntryKind.FILE),
        ]
        readme = snap.entries[-1]
        assert readme.size == len(b"# hello\n")
        assert readme.value.content == ContentId.of_bytes(b"# hello\n")

    def test_empty_directory(self, tmp_path):
        """Test an empty root gives an empty snapshot"""
        assert len(scan(build_tree(tmp_path / "empty", {}))) == 0

    def test_single_thread(self, replica):
        """Test the result does not depend on the worker count"""
        assert scan(replica, ScanOptions(threads=1)) == scan(replica, ScanOptions(threads=4))

    def test_symlink_hash_target(self, replica):
        """Test symlinks become files whose content is the target"""
        os.symlink("readme.md", replica / "alias")

        snap = scan(replica)
        alias = next(e for e in snap.entries if e.path == "/alias")

        assert alias.kind is EntryKind.FILE
        assert alias.value.content == ContentId.of_bytes(b"readme.md")

    def test_symlink_skip(self, replica):
        """Test symlinks can be left out"""
        os.symlink("docs", replica / "shortcut")

        snap = scan(replica, ScanOptions(symlinks=SymlinkPolicy.SKIP))

        assert "/shortcut" not in [e.path for e in snap.entries]

    @pytest.mark.skipif(not hasattr(os, "mkfifo"), reason="needs named pipes")
    def test_special_files_skipped(self, replica, capsys):
        """Test a named pipe is skipped with a warning"""
        os.mkfifo(replica / "pipe")

        snap = scan(replica)

        assert "/pipe" not in [e.path for e in snap.entries]
        assert "⚠ Skipping special file" in capsys.readouterr().out

    def test_not_a_directory(self, tmp_path):
        """Test scanning a missing root"""
        with pytest.raises(ScanError, match="not a directory"):
            scan(tmp_path / "missing")

    def test_unreadable_files_collected(self, replica):
        """Test every read failure is reported together"""
        with patch("src.scanner.hash_file", side_effect=PermissionError(13, "Permission denied")):
            with pytest.raises(ScanError) as exc_info:
                scan(replica)

        assert len(exc_info.value.failures) == 2
        assert all("Permission denied" in failure for failure in exc_info.value.failures)

    @needs_byte_names
    def test_non_utf8_name_reported(self, replica):
        """Test a name that is not UTF-8 is listed as a failure"""
        # Arrange
        (replica / "docs" / BAD_NAME).write_bytes(b"data")

        # Act
        with pytest.raises(ScanError) as exc_info:
            scan(replica)

        # Assert
        assert exc_info.value.failures == [f"{replica}/docs/bad\\xff: name is not valid UTF-8"]


class TestIndexBlobs:
    """Test index_blobs"""

    def test_maps_content_to_path(self, tmp_path):
        """Test each content identity points at a file providing it"""
        # Arrange
        root = build_tree(
            tmp_path / "blobs",
            {"a.txt": b"alpha", "copy": None, "copy/a.txt": b"alpha", "b.txt": b"beta"},
        )

        # Act
        index = index_blobs(root)

        # Assert
        assert len(index) == 2
        assert index[ContentId.of_bytes(b"alpha")] == root / "a.txt"
        assert index[ContentId.of_bytes(b"beta")].read_bytes() == b"beta"

    def test_regular_file_preferred_over_symlink(self, tmp_path):
        """Test a symlink whose target bytes match a file does not shadow the file"""
        root = build_tree(tmp_path / "blobs", {"z-file": b"payload"})
        os.symlink("payload", root / "a-link")

        index = index_blobs(root)

        assert index[ContentId.of_bytes(b"payload")] == root / "z-file"
