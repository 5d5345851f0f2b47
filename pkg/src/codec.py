"""Text formats for paths, content identities, command scripts and conflict reports"""
from typing import Iterable, List, Tuple
from urllib.parse import unquote

from src.config import HASH_ALGORITHM, SCRIPT_HEADER
from src.errors import ScriptFormatError
from src.model import (
    BREAK,
    COMMAND_CODES,
    Command,
    CommandSequence,
    ContentId,
    NodePath,
    Step,
    TypeTag,
    Value,
)

CONFLICT_PREFIX = "CONFLICT "
DIGEST_LENGTH = 64


def _encode_char(char: str) -> str:
    if char in (" ", "%") or ord(char) < 0x20 or ord(char) == 0x7F:
        return f"%{ord(char):02X}"
    return char


def encode_path(node: NodePath) -> str:
    """`/a/x` with space, `%` and control characters percent-encoded"""
    return "/" + "/".join("".join(_encode_char(c) for c in segment) for segment in node.segments)


def decode_path(text: str) -> NodePath:
    if not text.startswith("/"):
        raise ValueError(f"path must start with '/': {text!r}")
    segments = text[1:].split("/")
    return NodePath(tuple(unquote(segment) for segment in segments))


def parse_content(token: str, size: str) -> ContentId:
    """
    Parse `sha256:<hex>` and a decimal size

    Raises:
        ValueError: unknown algorithm, malformed digest or size
    """
    algorithm, _, digest = token.partition(":")
    if algorithm != HASH_ALGORITHM:
        raise ValueError(f"unsupported content algorithm: {algorithm!r}")
    if len(digest) != DIGEST_LENGTH or any(c not in "0123456789abcdef" for c in digest):
        raise ValueError(f"malformed {HASH_ALGORITHM} digest: {digest!r}")
    if not size.isdigit():
        raise ValueError(f"malformed size: {size!r}")
    return ContentId(algorithm, digest, int(size))


def format_command(command: Command) -> str:
    """One script line: `<xy> <path> [sha256:<hex> <size>]`"""
    line = f"{command.code} {encode_path(command.node)}"
    if command.output is TypeTag.FILE:
        line += f" {command.value.content}"
    return line


def parse_command(text: str) -> Command:
    parts = text.split(" ")
    if not parts or parts[0] not in COMMAND_CODES:
        raise ValueError(f"unknown command code in {text!r}")
    code = parts[0]
    expected = 4 if code[1] == TypeTag.FILE.value else 2
    if len(parts) != expected:
        raise ValueError(f"command {code} takes {expected - 1} field(s): {text!r}")
    node = decode_path(parts[1])
    if expected == 4:
        return Command.of(code, node, Value.file(parse_content(parts[2], parts[3])))
    return Command.of(code, node)


def _check_writable(steps: Iterable[Step]) -> List[Command]:
    commands = []
    for step in steps:
        if step is BREAK:
            raise ValueError("Break cannot be written to a script")
        if step.is_assertion:
            raise ValueError(f"assertion {step} is never written to a script")
        if step.value.is_file and step.value.content.algorithm != HASH_ALGORITHM:
            raise ValueError(f"{step} carries a value without {HASH_ALGORITHM} identity")
        commands.append(step)
    return commands


def dump_script(steps: Iterable[Step]) -> str:
    """Header line, then one command per line in application order"""
    lines = [SCRIPT_HEADER] + [format_command(c) for c in _check_writable(steps)]
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return [(number, line) for number, line in enumerate(lines, start=1)]


def load_script(text: str) -> CommandSequence:
    """
    Parse a command script; bb and dd lines are accepted

    Raises:
        ScriptFormatError: missing header or a malformed line
    """
    lines = _content_lines(text)
    if not lines or lines[0][1] != SCRIPT_HEADER:
        raise ScriptFormatError(f"script must start with {SCRIPT_HEADER!r}")
    commands = []
    for number, line in lines[1:]:
        try:
            commands.append(parse_command(line))
        except ValueError as e:
            raise ScriptFormatError(f"line {number}: {e}")
    return tuple(commands)


def format_conflicts(pairs: Iterable) -> str:
    """`CONFLICT <cmdA> | <cmdB>` per dependent pair, nothing else"""
    lines = [
        f"{CONFLICT_PREFIX}{format_command(pair.from_a)} | {format_command(pair.from_b)}"
        for pair in pairs
    ]
    return "".join(line + "\n" for line in lines)


def load_conflicts(text: str) -> List[Tuple[Command, Command]]:
    pairs = []
    for number, line in _content_lines(text):
        if not line.startswith(CONFLICT_PREFIX):
            raise ScriptFormatError(f"line {number}: expected {CONFLICT_PREFIX.strip()}")
        left, separator, right = line[len(CONFLICT_PREFIX):].partition(" | ")
        if not separator:
            raise ScriptFormatError(f"line {number}: missing ' | ' separator")
        try:
            pairs.append((parse_command(left), parse_command(right)))
        except ValueError as e:
            raise ScriptFormatError(f"line {number}: {e}")
    return pairs
