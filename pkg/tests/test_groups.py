import random
from itertools import permutations

import pytest
import sympy

from core.errors import ForeignGeneratorError, PresentationError, SerializationError
from core.groups.presentation import (
    Presentation,
    abelianization,
    presentation_from_json,
    presentation_to_json,
)
from core.groups.tietze import Verdict, apply_substitutions, is_trivial_certified, simplify
from core.groups.torus import match_torus_relator
from core.groups.trefoil import (
    TrefoilNormalForm,
    equal_in_trefoil_group,
    normal_form_to_word,
    trefoil_normal_form,
)
from core.groups.words import (
    Word,
    cyclic_key,
    cyclic_reduce,
    free_reduce,
    syllables,
    word_from_string,
    word_to_string,
    words_equal_freely,
)

TREFOIL_RELATORS = ["b c d^-1", "a b^-1 c^-1 b", "a c d", "a b d^-1"]
XY = ("x", "y")


def w(text, names=XY):
    return word_from_string(text, names)


def random_word(rng, generators, max_length):
    return Word.of(*[(rng.randrange(generators), rng.choice((1, -1)))
                     for _ in range(rng.randint(0, max_length))])


# words

def test_free_reduce():
    names = ("α", "β")
    assert free_reduce(w("α α α^-1", names)) == w("α", names)
    assert free_reduce(w("x x^-1")) == Word()
    reduced = w("x^-2 y x^2 y^-1")
    assert free_reduce(reduced) == reduced
    assert words_equal_freely(w("x y y^-1"), w("y^-1 y x"))


def test_free_reduce_is_idempotent_and_shortens():
    rng = random.Random(3)
    for _ in range(500):
        word = random_word(rng, 3, 12)
        once = free_reduce(word)
        assert free_reduce(once) == once
        assert len(once) <= len(word)


def test_cyclic_reduce():
    assert cyclic_reduce(w("x^-1 y x")) == w("y")
    assert cyclic_reduce(w("x^2 y^-1")) == w("x^2 y^-1")
    assert cyclic_reduce(Word()) == Word()


def test_cyclic_key_ignores_rotation_and_inversion():
    base = w("x^2 y^-3")
    assert cyclic_key(base.rotate(3)) == cyclic_key(base)
    assert cyclic_key(base.inverse()) == cyclic_key(base)
    assert cyclic_key(w("x y")) != cyclic_key(w("x y^-1"))


def test_syllables():
    assert syllables(w("x x y^-1 x")) == [(0, 2), (1, -1), (0, 1)]
    assert syllables(w("x x y^-1 x"), cyclic=True) == [(1, -1), (0, 3)]


def test_word_strings():
    names = ("a", "b", "c", "d")
    assert word_to_string(w("a b^-1 c^-1 b", names), names) == "a b^-1 c^-1 b"
    assert word_to_string(w("b^2*d^-3", names), names) == "b^2 d^-3"
    assert word_to_string(Word(), names) == "1"
    with pytest.raises(PresentationError):
        w("z")
    with pytest.raises(PresentationError):
        w("x^q")


def test_presentation_validation():
    with pytest.raises(PresentationError):
        Presentation(("x", "x"))
    with pytest.raises(PresentationError):
        Presentation(("x",), (Word.of((1, 1)),))


def test_presentation_json_documents(trefoil_complement):
    doc = presentation_to_json(trefoil_complement)
    assert doc["format"] == 1 and doc["kind"] == "presentation"
    assert doc["relators"][0] == [["b", 1], ["c", 1], ["d", -1]]
    assert presentation_from_json(doc) == trefoil_complement
    with pytest.raises(SerializationError):
        presentation_from_json({**doc, "format": 3})
    with pytest.raises(SerializationError):
        presentation_from_json({**doc, "relators": [[["e", 1]]]})


# abelianization

def test_abelianization_examples(trefoil_complement):
    sub3 = Presentation.from_strings(("α", "β"), ["α", "α^2 β^-1"])
    assert abelianization(sub3) == (0, ())
    assert abelianization(trefoil_complement) == (1, ())
    assert abelianization(Presentation.from_strings(("γ", "δ"), ["γ^2 δ^-1"])) == (1, ())
    assert abelianization(Presentation.from_strings(XY, ["x^2", "y^3"])).torsion == (6,)
    assert abelianization(Presentation(("x",))) == (1, ())


# simplification

def test_simplify_sub3_circle_to_trivial():
    trace = simplify(Presentation.from_strings(("α", "β"), ["α", "α^2 β^-1"]))
    assert trace.presentation.generators == ()
    assert trace.presentation.relators == ()
    assert set(trace.substitutions) == {"α", "β"}


def test_simplify_records_boundary_degree_two():
    trace = simplify(Presentation.from_strings(("γ", "δ"), ["γ^2 δ^-1"]))
    assert str(trace.presentation) == "<γ | >"
    assert trace.substitution_strings() == {"δ": "γ^2"}


def test_simplify_knot_group(trefoil_complement):
    trace = simplify(trefoil_complement)
    assert len(trace.presentation.generators) == 2
    assert len(trace.presentation.relators) == 1
    match = match_torus_relator(trace.presentation)
    assert (match.p, match.q) == (2, 3)


@pytest.mark.parametrize("order", list(permutations(range(4))))
def test_knot_group_under_every_relator_order(order):
    shuffled = Presentation.from_strings("abcd", [TREFOIL_RELATORS[i] for i in order])
    trace = simplify(shuffled)
    assert (len(trace.presentation.generators), len(trace.presentation.relators)) == (2, 1)
    match = match_torus_relator(trace.presentation)
    assert match is not None and (match.p, match.q) == (2, 3)


def test_zero_budget_is_the_greedy_rule(trefoil_complement):
    trace = simplify(trefoil_complement, max_search_nodes=0)
    assert len(trace.presentation.generators) == 2
    assert abelianization(trace.presentation) == abelianization(trefoil_complement)


def test_simplify_drops_duplicates_and_empty_relators():
    p = Presentation.from_strings(XY, ["x y x^-1 y^-1", "y x y^-1 x^-1", "x x^-1"])
    trace = simplify(p)
    assert len(trace.presentation.relators) == 1
    moves = [step["move"] for step in trace.steps]
    assert "drop-empty" in moves and "drop-duplicate" in moves


def test_simplify_preserves_abelianization_on_random_presentations():
    rng = random.Random(5)
    for _ in range(150):
        gens = rng.randint(1, 4)
        names = tuple("abcd"[:gens])
        relators = tuple(random_word(rng, gens, 6) for _ in range(rng.randint(0, 4)))
        p = Presentation(names, relators)
        trace = simplify(p, max_search_nodes=200)
        assert abelianization(trace.presentation) == abelianization(p)


def _trefoil_image(trace):
    """Words over the surviving generators sent into <x, y | x^2 = y^3>."""
    match = match_torus_relator(trace.presentation)
    (gx, ex), (gy, ey) = sorted(syllables(trace.presentation.relators[0], cyclic=True),
                                key=lambda run: abs(run[1]))
    images = {gx: Word.power(0, 1 if ex > 0 else -1), gy: Word.power(1, -1 if ey > 0 else 1)}
    assert trace.presentation.generators[gx] == match.x

    def image(word):
        out = Word()
        for letter in word:
            piece = images[letter.generator]
            out = out * (piece if letter.exponent == 1 else piece.inverse())
        return out

    return image


def test_substitutions_turn_original_relators_into_consequences(trefoil_complement):
    trace = simplify(trefoil_complement)
    image = _trefoil_image(trace)
    for relator in trefoil_complement.relators:
        rewritten = apply_substitutions(trace, relator)
        assert trefoil_normal_form(image(rewritten)).is_identity()


def test_triviality_verdicts(trefoil_complement):
    sub3 = Presentation.from_strings(("α", "β"), ["α", "α^2 β^-1"])
    assert is_trivial_certified(sub3).verdict is Verdict.TRIVIAL_WITH_TRACE
    knot = is_trivial_certified(trefoil_complement)
    assert knot.verdict is Verdict.NOT_TRIVIAL_ABELIAN_WITNESS
    assert knot.abelian.rank == 1
    # perfect, and no generator occurs once in any relator
    stuck = Presentation.from_strings(("a", "b"), ["a b a^-1 b^-2", "b a b^-1 a^-2"])
    assert is_trivial_certified(stuck).verdict is Verdict.UNKNOWN


# torus relators

@pytest.mark.parametrize("relator, expected", [
    ("b^2 d^-3", (2, 3)),
    ("d^-3 b^2", (2, 3)),
    ("b^3 d^2", (2, 3)),
    ("b^2 d^-4", (2, 4)),
    ("b d^2 b d^-1", None),
    ("b^2 d^-2", None),
    ("b d^-3", None),
])
def test_match_torus_relator(relator, expected):
    match = match_torus_relator(Presentation.from_strings(("b", "d"), [relator]))
    assert (None if match is None else (match.p, match.q)) == expected


def test_match_needs_two_generators_one_relator():
    assert match_torus_relator(Presentation.from_strings("abd", ["b^2 d^-3"])) is None
    assert match_torus_relator(Presentation.from_strings("bd", ["b^2 d^-3", "b d"])) is None


# trefoil group

def test_trefoil_normal_forms():
    assert trefoil_normal_form(w("x^2 y^-3")).is_identity()
    assert trefoil_normal_form(w("x")) == TrefoilNormalForm(0, ((0, 1),))
    assert trefoil_normal_form(w("x^-1")) == TrefoilNormalForm(-1, ((0, 1),))
    assert trefoil_normal_form(w("y^-1 x x^-1 y^2 y^-1 x")) == trefoil_normal_form(w("x"))


def test_braid_relation():
    s, t = w("y^-1 x"), w("x^-1 y^2")
    assert equal_in_trefoil_group(s * t * s, t * s * t)
    assert not equal_in_trefoil_group(w("x"), w("y"))
    z = w("x^2")
    assert equal_in_trefoil_group(z * w("x"), w("x") * z)
    assert equal_in_trefoil_group(w("y^3") * w("y"), w("y") * w("x^2"))


def test_relator_conjugates_are_trivial():
    rng = random.Random(17)
    relator = w("x^2 y^-3")
    for _ in range(100):
        conjugator = random_word(rng, 2, 10)
        assert trefoil_normal_form(conjugator * relator * conjugator.inverse()).is_identity()


def test_foreign_generator():
    with pytest.raises(ForeignGeneratorError):
        trefoil_normal_form(Word.of((2, 1)))


# reduced Burau matrices of B_3 at t = 2; x = s1 s2 s1 and y = s1 s2 satisfy x^2 = y^3 = t^3
T = sympy.Rational(2)
S1 = sympy.ImmutableMatrix([[-T, 1], [0, 1]])
S2 = sympy.ImmutableMatrix([[1, 0], [T, -T]])
X_MATRIX = S1 * S2 * S1
Y_MATRIX = S1 * S2
IMAGES = {(0, 1): X_MATRIX, (0, -1): X_MATRIX.inv(), (1, 1): Y_MATRIX, (1, -1): Y_MATRIX.inv()}
IDENTITY = sympy.ImmutableMatrix(sympy.eye(2))


def burau(word):
    out = IDENTITY
    for letter in word:
        out = out * IMAGES[(letter.generator, letter.exponent)]
    return out


def test_burau_images_satisfy_the_relation():
    assert burau(w("x^2")) == burau(w("y^3"))
    assert burau(w("x^2")) != IDENTITY


def test_normal_form_agrees_with_burau():
    rng = random.Random(23)
    for _ in range(10000):
        word = random_word(rng, 2, 10)
        assert burau(normal_form_to_word(trefoil_normal_form(word))) == burau(word)


def test_equal_normal_forms_have_equal_burau_images():
    rng = random.Random(29)
    relator = w("x^2 y^-3")
    for _ in range(2000):
        left = random_word(rng, 2, 8)
        conjugator = random_word(rng, 2, 4)
        cut = rng.randint(0, len(left))
        right = Word(left.letters[:cut]) * conjugator * relator * conjugator.inverse() * Word(left.letters[cut:])
        assert equal_in_trefoil_group(left, right)
        assert burau(left) == burau(right)
