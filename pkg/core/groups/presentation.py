"""
Finitely presented groups, their abelianization and JSON documents.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, NamedTuple, Sequence, Tuple

from core.algebra.smith import IntegerMatrix, smith_normal_form
from core.errors import PresentationError, SerializationError
from core.groups.words import Letter, Word, word_from_string, word_to_string

FORMAT_VERSION = 1
PRESENTATION_KIND = "presentation"


@dataclass(frozen=True)
class Presentation:
    generators: Tuple[str, ...]
    relators: Tuple[Word, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError(f"duplicate generator names in {list(self.generators)}")
        for relator in self.relators:
            for letter in relator:
                if not 0 <= letter.generator < len(self.generators):
                    raise PresentationError(
                        f"relator letter {letter} references a missing generator "
                        f"(have {len(self.generators)})")

    @classmethod
    def from_strings(cls, generators: Sequence[str], relators: Sequence[str]) -> "Presentation":
        """Presentation.from_strings("abcd", ["b c d^-1", ...])."""
        names = tuple(generators)
        return cls(names, tuple(word_from_string(r, names) for r in relators))

    def relator_strings(self) -> List[str]:
        return [word_to_string(r, self.generators) for r in self.relators]

    def __str__(self) -> str:
        return f"<{', '.join(self.generators)} | {', '.join(self.relator_strings())}>"

    def exponent_matrix(self) -> IntegerMatrix:
        """Rows are generators, columns relators, entries exponent sums."""
        return IntegerMatrix.from_rows(
            [[r.exponent_sum(g) for r in self.relators] for g in range(len(self.generators))],
            cols=len(self.relators))


class AbelianInvariants(NamedTuple):
    rank: int
    torsion: Tuple[int, ...]

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion


def abelianization(presentation: Presentation) -> AbelianInvariants:
    snf = smith_normal_form(presentation.exponent_matrix())
    return AbelianInvariants(
        rank=len(presentation.generators) - snf.rank,
        torsion=tuple(d for d in snf.diagonal if d > 1),
    )


def presentation_to_json(presentation: Presentation) -> Dict[str, Any]:
    names = presentation.generators
    return {
        "format": FORMAT_VERSION,
        "kind": PRESENTATION_KIND,
        "generators": list(names),
        "relators": [[[names[l.generator], l.exponent] for l in r] for r in presentation.relators],
    }


def presentation_from_json(doc: Dict[str, Any]) -> Presentation:
    if not isinstance(doc, dict):
        raise SerializationError("presentation document must be a JSON object")
    if doc.get("format") != FORMAT_VERSION:
        raise SerializationError(f"unsupported format {doc.get('format')!r}, expected {FORMAT_VERSION}")
    if doc.get("kind", PRESENTATION_KIND) != PRESENTATION_KIND:
        raise SerializationError(f"document kind {doc.get('kind')!r} is not {PRESENTATION_KIND!r}")
    try:
        names = tuple(str(g) for g in doc["generators"])
        index = {name: i for i, name in enumerate(names)}
        relators = tuple(
            Word(tuple(Letter(index[name], int(exp)) for name, exp in relator))
            for relator in doc.get("relators", []))
        return Presentation(names, relators)
    except (KeyError, TypeError, ValueError) as e:
        raise SerializationError(f"malformed presentation document: {e}") from e
