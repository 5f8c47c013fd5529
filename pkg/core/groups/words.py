"""
Words in free groups.

A word is a sequence of letters (generator index, exponent +-1); the empty
word is the identity. Generator indices refer to a Presentation's generator
list, names only appear when parsing or printing.
"""

from dataclasses import dataclass
from typing import Iterator, List, NamedTuple, Sequence, Tuple

from core.errors import PresentationError


class Letter(NamedTuple):
    generator: int
    exponent: int

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.exponent)


@dataclass(frozen=True)
class Word:
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        for letter in self.letters:
            if letter.exponent not in (1, -1):
                raise PresentationError(f"letter exponent must be +-1, got {letter}")

    @classmethod
    def of(cls, *pairs: Tuple[int, int]) -> "Word":
        """Word.of((0, 1), (1, -1)) is x0 x1^-1."""
        return cls(tuple(Letter(g, e) for g, e in pairs))

    @classmethod
    def power(cls, generator: int, exponent: int) -> "Word":
        sign = 1 if exponent > 0 else -1
        return cls(tuple(Letter(generator, sign) for _ in range(abs(exponent))))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item):
        return self.letters[item]

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, exponent: int) -> "Word":
        base = self if exponent >= 0 else self.inverse()
        return Word(base.letters * abs(exponent))

    def inverse(self) -> "Word":
        return Word(tuple(letter.inverse() for letter in reversed(self.letters)))

    def generators(self) -> List[int]:
        return sorted({letter.generator for letter in self.letters})

    def occurrences(self, generator: int) -> int:
        return sum(1 for letter in self.letters if letter.generator == generator)

    def exponent_sum(self, generator: int) -> int:
        return sum(letter.exponent for letter in self.letters if letter.generator == generator)

    def rotate(self, start: int) -> "Word":
        if not self.letters:
            return self
        start %= len(self.letters)
        return Word(self.letters[start:] + self.letters[:start])


def free_reduce(word: Word) -> Word:
    """Cancel adjacent inverse pairs until none remain."""
    stack: List[Letter] = []
    for letter in word:
        if stack and stack[-1].generator == letter.generator and stack[-1].exponent == -letter.exponent:
            stack.pop()
        else:
            stack.append(letter)
    return Word(tuple(stack))


def cyclic_reduce(word: Word) -> Word:
    """Freely reduce, then strip first/last pairs that cancel cyclically."""
    letters = free_reduce(word).letters
    start, end = 0, len(letters)
    while end - start >= 2 and letters[start] == letters[end - 1].inverse():
        start += 1
        end -= 1
    return Word(letters[start:end])


def cyclic_key(word: Word) -> Tuple[Letter, ...]:
    """Minimal rotation of the word or its inverse; equal keys mean the same relator up to conjugacy and inversion."""
    reduced = cyclic_reduce(word)
    if not reduced.letters:
        return ()
    candidates = []
    for w in (reduced, reduced.inverse()):
        candidates.extend(w.rotate(i).letters for i in range(len(w)))
    return min(candidates)


def syllables(word: Word, cyclic: bool = False) -> List[Tuple[int, int]]:
    """
    Maximal runs of one generator as (generator, exponent sum). With
    cyclic=True the word is read around a circle, so a run split across the
    ends counts once.
    """
    letters = list(word.letters)
    if cyclic:
        letters = list(cyclic_reduce(word).letters)
        if letters and len({l.generator for l in letters}) > 1:
            shift = 0
            while letters[shift].generator == letters[-1].generator:
                shift += 1
            letters = letters[shift:] + letters[:shift]
    runs: List[Tuple[int, int]] = []
    for letter in letters:
        if runs and runs[-1][0] == letter.generator:
            runs[-1] = (letter.generator, runs[-1][1] + letter.exponent)
        else:
            runs.append((letter.generator, letter.exponent))
    return runs


def substitute(word: Word, generator: int, replacement: Word) -> Word:
    """Replace every occurrence of generator (inverse letters by the inverse word) and freely reduce."""
    inverse = replacement.inverse()
    letters: List[Letter] = []
    for letter in word:
        if letter.generator != generator:
            letters.append(letter)
        elif letter.exponent == 1:
            letters.extend(replacement.letters)
        else:
            letters.extend(inverse.letters)
    return free_reduce(Word(tuple(letters)))


def reindex(word: Word, mapping: dict) -> Word:
    return Word(tuple(Letter(mapping[l.generator], l.exponent) for l in word))


def word_from_string(text: str, generators: Sequence[str]) -> Word:
    """
    Parse "a b^-1 c^-1 b" or "b^2*d^-3" over the given generator names.
    "1" and the empty string are the identity.
    """
    index = {name: i for i, name in enumerate(generators)}
    letters: List[Letter] = []
    for token in text.replace("*", " ").split():
        if token == "1":
            continue
        name, _, power = token.partition("^")
        if name not in index:
            raise PresentationError(f"unknown generator {name!r} in {text!r}")
        try:
            exponent = int(power) if power else 1
        except ValueError as e:
            raise PresentationError(f"bad exponent in {token!r}") from e
        letters.extend(Word.power(index[name], exponent).letters)
    return Word(tuple(letters))


def word_to_string(word: Word, generators: Sequence[str]) -> str:
    if not word.letters:
        return "1"
    parts = []
    for generator, exponent in syllables(word):
        name = generators[generator]
        if exponent == 0:
            continue
        parts.append(name if exponent == 1 else f"{name}^{exponent}")
    return " ".join(parts) if parts else "1"


def words_equal_freely(a: Word, b: Word) -> bool:
    return free_reduce(a) == free_reduce(b)
