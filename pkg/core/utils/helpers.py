"""
JSON file helpers shared by the CLI and the operator scripts.
"""

import json
from pathlib import Path
from typing import Any, Dict, Union

from core.errors import SerializationError

PathLike = Union[str, Path]


def to_json_text(doc: Any) -> str:
    """Pretty JSON that keeps Greek generator names readable."""
    return json.dumps(doc, ensure_ascii=False, indent=2, allow_nan=False)


def read_json(path: PathLike) -> Dict[str, Any]:
    """Read a JSON object from disk; unreadable or malformed files raise SerializationError."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            doc = json.load(f)
    except OSError as e:
        raise SerializationError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise SerializationError(f"{path} is not valid JSON: {e}") from e
    except UnicodeDecodeError as e:
        raise SerializationError(f"{path} is not UTF-8 text: {e}") from e
    if not isinstance(doc, dict):
        raise SerializationError(f"{path} does not hold a JSON object")
    return doc


def write_json(path: PathLike, doc: Any) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(to_json_text(doc) + "\n")
    return path
