"""
Versioned JSON documents for complexes.

    {"format": 1, "kind": "delta-complex",
     "dims": [1, 2, 2, 1],
     "faces": {"1": [[0, 0], ...], "2": [...], "3": [...]},
     "labels": {"0": ["A=B=C=D"], "1": ["alpha", "beta"], ...}}

Face entries are indices into the dimension below. Order of cells and slots is
preserved exactly, so a round trip is lossless.
"""

import json
from typing import Any, Dict

from core.errors import ComplexConstructionError, SerializationError
from core.complex.delta_complex import DeltaComplex, new_complex

FORMAT_VERSION = 1
COMPLEX_KIND = "delta-complex"


def complex_to_json(complex_: DeltaComplex) -> Dict[str, Any]:
    return {
        "format": FORMAT_VERSION,
        "kind": COMPLEX_KIND,
        "dims": list(complex_.cells_per_dim),
        "faces": {
            str(n): [[face.index for face in row] for row in complex_.faces[n]]
            for n in range(1, complex_.dimension + 1)
        },
        "labels": {str(n): list(complex_.labels[n]) for n in range(complex_.dimension + 1)},
    }


def complex_from_json(doc: Dict[str, Any]) -> DeltaComplex:
    if not isinstance(doc, dict):
        raise SerializationError("complex document must be a JSON object")
    if doc.get("format") != FORMAT_VERSION:
        raise SerializationError(f"unsupported format {doc.get('format')!r}, expected {FORMAT_VERSION}")
    if doc.get("kind", COMPLEX_KIND) != COMPLEX_KIND:
        raise SerializationError(f"document kind {doc.get('kind')!r} is not {COMPLEX_KIND!r}")
    try:
        dims = [int(c) for c in doc["dims"]]
        faces = {int(n): rows for n, rows in (doc.get("faces") or {}).items()}
        labels = {int(n): names for n, names in (doc.get("labels") or {}).items()}
        for n, names in labels.items():
            if not isinstance(names, list) or any(name is not None and not isinstance(name, str)
                                                  for name in names):
                raise SerializationError(f"labels of dimension {n} must be strings or null")
        return new_complex(dims, faces, labels)
    except ComplexConstructionError as e:
        raise SerializationError(f"invalid complex document: {e}") from e
    except (KeyError, TypeError, ValueError) as e:
        raise SerializationError(f"malformed complex document: {e}") from e


def dumps_complex(complex_: DeltaComplex) -> str:
    return json.dumps(complex_to_json(complex_), ensure_ascii=False, indent=2)


def loads_complex(text: str) -> DeltaComplex:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SerializationError(f"not valid JSON: {e}") from e
    return complex_from_json(doc)
