"""
Word problem for <x, y | x^2 = y^3>.

z = x^2 = y^3 is central and the quotient by <z> is Z/2 * Z/3, whose
elements have unique alternating normal forms. Every element is therefore
z^k followed by an alternating tail of x and y, y^2 syllables.
"""

from dataclasses import dataclass
from typing import List, Tuple

from core.errors import ForeignGeneratorError
from core.groups.words import Word

X, Y = 0, 1
_ORDER = {X: 2, Y: 3}


@dataclass(frozen=True)
class TrefoilNormalForm:
    k: int
    tail: Tuple[Tuple[int, int], ...] = ()

    def is_identity(self) -> bool:
        return self.k == 0 and not self.tail

    def __str__(self) -> str:
        names = {X: "x", Y: "y"}
        parts = [f"z^{self.k}"] if self.k else []
        parts += [names[g] if e == 1 else f"{names[g]}^{e}" for g, e in self.tail]
        return " ".join(parts) if parts else "1"


def _positive_letters(word: Word) -> Tuple[int, List[int]]:
    """x^-1 -> x z^-1 and y^-1 -> y^2 z^-1; returns (z exponent, positive letters)."""
    k = 0
    letters: List[int] = []
    for letter in word:
        if letter.generator not in _ORDER:
            raise ForeignGeneratorError(
                f"generator index {letter.generator} is not x (0) or y (1)")
        if letter.exponent == 1:
            letters.append(letter.generator)
        else:
            letters.extend([letter.generator] * (_ORDER[letter.generator] - 1))
            k -= 1
    return k, letters


def trefoil_normal_form(word: Word) -> TrefoilNormalForm:
    k, letters = _positive_letters(word)
    stack: List[List[int]] = []  # [generator, exponent] syllables, alternating
    for g in letters:
        if stack and stack[-1][0] == g:
            stack[-1][1] += 1
            if stack[-1][1] == _ORDER[g]:
                stack.pop()
                k += 1
        else:
            stack.append([g, 1])
    return TrefoilNormalForm(k, tuple((g, e) for g, e in stack))


def equal_in_trefoil_group(w1: Word, w2: Word) -> bool:
    return trefoil_normal_form(w1) == trefoil_normal_form(w2)


def normal_form_to_word(form: TrefoilNormalForm) -> Word:
    """z^k tail as a word, with z written x^2."""
    out = Word.power(X, 2 * form.k)
    for g, e in form.tail:
        out = out * Word.power(g, e)
    return out
