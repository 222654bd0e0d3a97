"""Utility functions for file IO."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from ..errors import SpecSyntaxError


def ensure_dir(path: Path) -> None:
    """Create a directory if it does not exist."""
    path.mkdir(parents=True, exist_ok=True)


def read_text(path: Path) -> str:
    """Read a UTF-8 spec file.

    Raises:
        SpecSyntaxError: at the line and column of the first byte that is not UTF-8.
    """
    data = Path(path).read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        head = data[: exc.start]
        line = head.count(b"\n") + 1
        column = exc.start - (head.rfind(b"\n") + 1) + 1
        raise SpecSyntaxError(f"invalid UTF-8 byte 0x{data[exc.start]:02x}", line, column) from exc


def read_json(path: Path) -> Any:
    with Path(path).open(encoding="utf-8") as fh:
        return json.load(fh)
