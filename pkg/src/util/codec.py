"""Canonical JSON text, digests and file helpers"""

import hashlib
import json
from pathlib import Path
from typing import Any, Union

from src.model.errors import InvalidStructureError


def canonical_json(payload: Any) -> str:
    """Deterministic JSON text: insertion-ordered keys, 2-space indent, LF end"""
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def compact_json(payload: Any) -> str:
    """Single-line JSON, used for digests and short log lines"""
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=False)


def digest(payload: Any) -> str:
    """sha256 of the compact canonical text"""
    return hashlib.sha256(compact_json(payload).encode("utf-8")).hexdigest()


def load_json(path: Union[str, Path]) -> Any:
    """Load a UTF-8 JSON file"""
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise InvalidStructureError(f"{path}: invalid JSON ({e})")


def write_text(path: Union[str, Path], text: str):
    """Write text with LF line endings"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def require(data: dict, key: str, kind: type, where: str) -> Any:
    """Fetch a typed field from a decoded JSON object"""
    if not isinstance(data, dict):
        raise InvalidStructureError(f"{where}: expected a JSON object")
    if key not in data:
        raise InvalidStructureError(f"{where}: missing field '{key}'")
    value = data[key]
    if kind is int and isinstance(value, bool):
        raise InvalidStructureError(f"{where}: field '{key}' must be an integer")
    if not isinstance(value, kind):
        raise InvalidStructureError(
            f"{where}: field '{key}' must be {kind.__name__},"
            f" got {type(value).__name__}"
        )
    return value
