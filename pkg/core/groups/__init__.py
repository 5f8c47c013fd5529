"""
Free-group words, finite presentations, Tietze simplification and the
trefoil-group word problem.
"""

from .words import (
    Letter,
    Word,
    free_reduce,
    cyclic_reduce,
    cyclic_key,
    syllables,
    substitute,
    word_from_string,
    word_to_string,
    words_equal_freely,
)
from .presentation import (
    Presentation,
    AbelianInvariants,
    abelianization,
    presentation_to_json,
    presentation_from_json,
)
from .tietze import (
    SimplificationTrace,
    TrivialityCertificate,
    Verdict,
    simplify,
    is_trivial_certified,
    apply_substitutions,
)
from .torus import TorusMatch, match_torus_relator
from .trefoil import (
    TrefoilNormalForm,
    trefoil_normal_form,
    equal_in_trefoil_group,
    normal_form_to_word,
)

__all__ = [
    "Letter",
    "Word",
    "free_reduce",
    "cyclic_reduce",
    "cyclic_key",
    "syllables",
    "substitute",
    "word_from_string",
    "word_to_string",
    "words_equal_freely",
    "Presentation",
    "AbelianInvariants",
    "abelianization",
    "presentation_to_json",
    "presentation_from_json",
    "SimplificationTrace",
    "TrivialityCertificate",
    "Verdict",
    "simplify",
    "is_trivial_certified",
    "apply_substitutions",
    "TorusMatch",
    "match_torus_relator",
    "TrefoilNormalForm",
    "trefoil_normal_form",
    "equal_in_trefoil_group",
    "normal_form_to_word",
]
