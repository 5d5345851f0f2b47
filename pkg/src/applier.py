"""Apply command scripts to real directories"""
import os
import shutil
from pathlib import Path
from typing import Dict, Iterable, Optional, Union

from src.codec import format_command
from src.errors import ApplyIOError, MissingBlobError, WouldBreakError
from src.model import BREAK, Command, ContentId, Step, TypeTag, first_breaking_step
from src.models import ApplyReport, ScanOptions
from src.scanner import index_blobs, scan

TEMP_SUFFIX = ".fsalg-tmp"


def _write_blob(target: Path, source: Path) -> None:
    if source.is_symlink():
        link = os.readlink(source)
        if target.is_symlink() or target.exists():
            target.unlink()
        os.symlink(link, target)
        return
    staging = target.with_name(f".{target.name}{TEMP_SUFFIX}")
    shutil.copyfile(source, staging)
    os.replace(staging, target)


def _perform(root: Path, command: Command, sources: Dict[ContentId, Path]) -> None:
    target = root.joinpath(*command.node.segments)
    code = command.code
    if code in ("bf", "ff"):
        _write_blob(target, sources[command.value.content])
    elif code == "bd":
        target.mkdir()
    elif code == "fb":
        target.unlink()
    elif code == "db":
        target.rmdir()
    elif code == "fd":
        target.unlink()
        target.mkdir()
    elif code == "df":
        target.rmdir()
        _write_blob(target, sources[command.value.content])
    # bb and dd change nothing; the simulation already checked them


def _blob_sources(
    script: Iterable[Command], blobs: Optional[Union[str, Path]], options: ScanOptions
) -> Dict[ContentId, Path]:
    wanted = {c.value.content for c in script if c.output is TypeTag.FILE}
    if not wanted:
        return {}
    available = index_blobs(blobs, options) if blobs is not None else {}
    missing = sorted(str(content) for content in wanted if content not in available)
    if missing:
        raise MissingBlobError(f"no blob provides {', '.join(missing)}")
    return available


def apply_script(
    script: Iterable[Step],
    directory: Union[str, Path],
    blobs: Optional[Union[str, Path]] = None,
    dry_run: bool = False,
    options: Optional[ScanOptions] = None,
) -> ApplyReport:
    """
    Apply a command script to a directory

    The directory is scanned fresh and the script simulated against the scan
    first; nothing is touched unless the whole script works. Mutations then run
    strictly in script order.

    Args:
        script: Commands in application order
        directory: Replica to change
        blobs: Directory providing the content of every file the script writes
        dry_run: Stop after simulation and the blob check
        options: Scan options for the directory and the blob source

    Returns:
        Report listing the completed commands

    Raises:
        WouldBreakError: the simulation reached Broken
        MissingBlobError: some written content has no blob
        ApplyIOError: a mutation failed; carries the completed commands
    """
    root = Path(directory)
    options = options or ScanOptions()
    steps = list(script)

    current = scan(root, options).to_filesystem()
    index = first_breaking_step(current, steps)
    if index is not None:
        offender = steps[index]
        text = str(offender) if offender is BREAK else format_command(offender)
        raise WouldBreakError(index, text)
    sources = _blob_sources(steps, blobs, options)

    report = ApplyReport(directory=str(root), dry_run=dry_run, planned=len(steps))
    if dry_run:
        return report

    for position, command in enumerate(steps):
        line = format_command(command)
        try:
            _perform(root, command, sources)
        except OSError as e:
            raise ApplyIOError(
                f"command #{position + 1} ({line}) failed: {e.strerror or e}",
                report.completed,
                position,
            )
        report.completed.append(line)
    return report
