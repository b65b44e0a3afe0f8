"""Free-group word operations and the word text syntax.

Generator names are lowercase identifiers; the same name in uppercase denotes the
inverse letter. A run may carry an exponent: `a^3`, `B^2` (= b^-2), `a^-1`.
"""

import logging
import re
from typing import Dict, List, Sequence, Tuple

from surgery.errors import MalformedPresentation, UnknownGenerator
from .models import Letter, Word, reduce_letters

logger = logging.getLogger(__name__)

NAME_PATTERN = re.compile(r'^[a-z][a-z0-9_]*$')
RUN_PATTERN = re.compile(r'^([A-Za-z][A-Za-z0-9_]*)(?:\^\(?(-?\d+)\)?)?$')


def free_reduce(w: Word) -> Word:
    return Word.from_letters(reduce_letters(w.letters))


def cyclic_reduce(w: Word) -> Word:
    """Free reduction followed by cancelling the ends against each other"""
    letters = list(reduce_letters(w.letters))
    start, end = 0, len(letters)
    while end - start >= 2 and letters[start] == (letters[end - 1][0], -letters[end - 1][1]):
        start += 1
        end -= 1
    return Word.from_letters(letters[start:end])


def rotations(letters: Sequence[Letter]) -> List[Tuple[Letter, ...]]:
    return [tuple(letters[i:]) + tuple(letters[:i]) for i in range(len(letters))] or [()]


def cyclic_key(w: Word) -> Tuple[Letter, ...]:
    """Canonical representative of w up to cyclic permutation and inversion"""
    reduced = cyclic_reduce(w)
    candidates = rotations(reduced.letters) + rotations(reduced.inverse().letters)
    return min(candidates)


def substitute(w: Word, generator: int, replacement: Word) -> Word:
    """Replace every occurrence of `generator` by `replacement` and freely reduce"""
    letters: List[Letter] = []
    inverse = replacement.inverse()
    for g, sign in w.letters:
        if g == generator:
            letters.extend((replacement if sign > 0 else inverse).letters)
        else:
            letters.append((g, sign))
    return Word.from_letters(reduce_letters(letters))


def reindex(w: Word, mapping: Dict[int, int]) -> Word:
    return Word(syllables=tuple((mapping[g], e) for g, e in w.syllables))


def _resolve(name: str, generators: Sequence[str]) -> Tuple[int, int]:
    if name in generators:
        return generators.index(name), 1
    if name.lower() in generators and name != name.lower() and name == name.upper():
        return generators.index(name.lower()), -1
    raise UnknownGenerator(f"Unknown generator '{name}' (known: {', '.join(generators) or 'none'})")


def parse_word(text: str, generators: Sequence[str]) -> Word:
    """
    Parse a word such as `a b a B A B`, `c a b a^-2` or `aba` (single-letter
    generators may be juxtaposed). `1` and the empty string are the identity.
    """
    letters: List[Letter] = []
    for chunk in text.replace('*', ' ').replace('.', ' ').split():
        if chunk == '1':
            continue
        match = RUN_PATTERN.match(chunk)
        if not match:
            raise MalformedPresentation(f"Cannot parse word fragment '{chunk}'")
        name, exponent = match.group(1), int(match.group(2) or 1)

        try:
            runs = [_resolve(name, generators)]
        except UnknownGenerator:
            # juxtaposed single-letter generators, exponent binds to the last one
            runs = [_resolve(char, generators) for char in name]

        for i, (generator, sign) in enumerate(runs):
            power = sign * (exponent if i == len(runs) - 1 else 1)
            letters.extend([(generator, 1 if power > 0 else -1)] * abs(power))
    return Word.from_letters(letters)


def format_word(w: Word, generators: Sequence[str]) -> str:
    if w.is_empty:
        return "1"
    parts = []
    for generator, exponent in w.syllables:
        if generator >= len(generators):
            raise UnknownGenerator(f"Generator index {generator} out of range")
        name = generators[generator] if exponent > 0 else generators[generator].upper()
        if abs(exponent) == 1:
            parts.append(name)
        else:
            parts.append(f"{name}^{abs(exponent)}")
    return " ".join(parts)
