"""Exception hierarchy and CLI exit codes"""
from enum import IntEnum
from typing import List, Optional


class ExitCode(IntEnum):
    """Process exit codes shared by every CLI verb"""
    OK = 0
    CONFLICTS = 1
    BREAKS = 2
    USAGE = 3


class FsalgError(Exception):
    """Base class for all synchronizer errors"""
    exit_code = ExitCode.BREAKS


class NotSimple(FsalgError, ValueError):
    """A sequence or set is not simple where a simple one is required"""


class BreaksEverything(FsalgError):
    """A command sequence breaks every filesystem"""

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message)
        self.index = index


class NoValidOrder(FsalgError):
    """No ordering of a command set avoids Break"""


class MixedPairs(NoValidOrder):
    """A component mixes construction and destruction adjacencies"""


class BrokenFilesystemError(FsalgError, ValueError):
    """A Broken or tree-property-violating filesystem was given as input"""


class NotExcluded(FsalgError, ValueError):
    """The command is not excluded from reconciliation"""


class MaximalityViolation(FsalgError):
    """An excluded command could be propagated without breaking or overriding"""


class FormatError(FsalgError, ValueError):
    """Malformed snapshot, script or conflict report"""
    exit_code = ExitCode.USAGE


class SnapshotFormatError(FormatError):
    """Malformed snapshot file"""


class ScriptFormatError(FormatError):
    """Malformed command script or conflict report"""


class InputFileError(FsalgError):
    """An input file named on the command line cannot be read"""
    exit_code = ExitCode.USAGE


class ScanError(FsalgError):
    """Directory scan could not read some entries"""

    def __init__(self, message: str, failures: Optional[List[str]] = None):
        super().__init__(message)
        self.failures = failures or []


class WouldBreakError(FsalgError):
    """Simulating a script against a directory reached Broken"""

    def __init__(self, index: int, command: str):
        super().__init__(f"command #{index + 1} would break the replica: {command}")
        self.index = index
        self.command = command


class MissingBlobError(FsalgError):
    """No blob source provides the content a command writes"""


class ApplyIOError(FsalgError):
    """I/O failure while mutating a directory"""

    def __init__(self, message: str, completed: List[str], failed_index: int):
        super().__init__(message)
        self.completed = completed
        self.failed_index = failed_index
