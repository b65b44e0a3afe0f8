"""Presentation combinators, Tietze elimination and the text/JSON codecs."""

import json
import logging
import re
from typing import Iterable, List, Optional, Sequence

from surgery.errors import MalformedPresentation, UnknownGenerator
from .models import Presentation, Word
from .words import NAME_PATTERN, cyclic_key, cyclic_reduce, format_word, free_reduce, parse_word, reindex, substitute

logger = logging.getLogger(__name__)

PRESENTATION_PATTERN = re.compile(r'^\s*gens\s*:(?P<gens>[^;]*);\s*rels\s*:(?P<rels>.*)$', re.DOTALL)


def presentation(generators: Sequence[str], relators: Iterable[Word] = ()) -> Presentation:
    """
    Validated constructor: unique lowercase names, relators freely reduced and
    using only known generator indices.
    """
    generators = tuple(generators)
    for name in generators:
        if not NAME_PATTERN.match(name):
            raise MalformedPresentation(f"Generator names must be lowercase identifiers, got '{name}'")
    if len(set(generators)) != len(generators):
        raise MalformedPresentation(f"Duplicate generator names in {generators}")

    reduced = []
    for relator in relators:
        for g in relator.generators():
            if g >= len(generators):
                raise UnknownGenerator(f"Relator uses generator index {g}, presentation has {len(generators)}")
        reduced.append(free_reduce(relator))
    return Presentation(generators=generators, relators=tuple(reduced))


def _fresh_names(taken: Sequence[str], names: Sequence[str]) -> List[str]:
    used = set(taken)
    fresh = []
    for name in names:
        candidate, k = name, 2
        while candidate in used:
            candidate = f"{name}{k}"
            k += 1
        used.add(candidate)
        fresh.append(candidate)
    return fresh


def _shift(w: Word, offset: int) -> Word:
    return Word(syllables=tuple((g + offset, e) for g, e in w.syllables))


def free_product(p1: Presentation, p2: Presentation) -> Presentation:
    """Disjoint union of generators and relators; clashing names of p2 get a numeric suffix"""
    offset = p1.generator_count
    names = list(p1.generators) + _fresh_names(p1.generators, p2.generators)
    relators = list(p1.relators) + [_shift(r, offset) for r in p2.relators]
    return presentation(names, relators)


def commutator(x: Word, y: Word) -> Word:
    return free_reduce(x * y * x.inverse() * y.inverse())


def direct_product(p1: Presentation, p2: Presentation) -> Presentation:
    """Free product plus [g, h] for every generator g of p1 and h of p2"""
    product = free_product(p1, p2)
    offset = p1.generator_count
    commutators = [
        commutator(Word.power_of(g), Word.power_of(offset + h))
        for g in range(p1.generator_count)
        for h in range(p2.generator_count)
    ]
    return presentation(product.generators, list(product.relators) + commutators)


def quotient_by_relator(p: Presentation, w: Word) -> Presentation:
    """Add w to the relators (quotient by its normal closure); the empty word changes nothing"""
    for g in w.generators():
        if g >= p.generator_count:
            raise UnknownGenerator(f"Word uses generator index {g}, presentation has {p.generator_count}")
    reduced = free_reduce(w)
    if reduced.is_empty:
        return p
    return presentation(p.generators, list(p.relators) + [reduced])


def _clean_relators(relators: Iterable[Word]) -> List[Word]:
    """Cyclically reduce, drop trivial relators and duplicates up to rotation and inversion"""
    kept, seen = [], set()
    for relator in relators:
        reduced = cyclic_reduce(relator)
        if reduced.is_empty:
            continue
        key = cyclic_key(reduced)
        if key in seen:
            continue
        seen.add(key)
        kept.append(reduced)
    return kept


def _find_elimination(generator_count: int, relators: Sequence[Word]):
    for g in range(generator_count):
        for index, relator in enumerate(relators):
            if relator.occurrences(g) == 1:
                return g, index
    return None


def tietze_eliminate(p: Presentation) -> Presentation:
    """
    Eliminate generators defined by a relator in which they occur exactly once.

    The lowest-index eligible generator goes first; its relator g^e w = 1 gives
    g = w^-e, which is substituted everywhere. The resulting group is isomorphic
    to the input.
    """
    generators = list(p.generators)
    relators = _clean_relators(p.relators)

    while True:
        found = _find_elimination(len(generators), relators)
        if found is None:
            break
        g, index = found
        relator = relators[index]

        letters = list(relator.letters)
        at = next(i for i, (h, _) in enumerate(letters) if h == g)
        sign = letters[at][1]
        rest = Word.from_letters(letters[at + 1:] + letters[:at])
        # g^sign * rest = 1
        value = rest.inverse() if sign > 0 else rest

        remaining = [substitute(r, g, value) for i, r in enumerate(relators) if i != index]
        mapping = {h: (h if h < g else h - 1) for h in range(len(generators)) if h != g}
        relators = _clean_relators(reindex(r, mapping) for r in remaining)
        logger.debug(f"Eliminated {generators[g]} = {format_word(value, generators)}")
        del generators[g]

    result = presentation(generators, relators)
    logger.debug(f"Tietze: {p.generator_count} -> {result.generator_count} generators, "
                 f"{len(p.relators)} -> {len(result.relators)} relators")
    return result


def _parse_relator(text: str, generators: Sequence[str]) -> Word:
    # `u = v` is read as the relator u v^-1
    sides = text.split('=')
    if len(sides) > 2:
        raise MalformedPresentation(f"Relator '{text}' has more than one '='")
    word = parse_word(sides[0], generators)
    if len(sides) == 2:
        word = word * parse_word(sides[1], generators).inverse()
    return word


def parse_presentation(text: str) -> Presentation:
    """
    Parse `gens: a,b,c ; rels: a b a B A B, c a b`.

    Relators are comma separated; `aba = bab` style equations are accepted.
    """
    match = PRESENTATION_PATTERN.match(text.strip())
    if not match:
        raise MalformedPresentation("Expected 'gens: ... ; rels: ...'")

    generators = [name.strip() for name in match.group('gens').split(',') if name.strip()]
    rels_text = match.group('rels').strip()
    for name in generators:
        if not NAME_PATTERN.match(name):
            raise MalformedPresentation(f"Generator names must be lowercase identifiers, got '{name}'")

    relators = [_parse_relator(chunk, generators) for chunk in rels_text.split(',') if chunk.strip()]
    return presentation(generators, relators)


def format_presentation(p: Presentation) -> str:
    rels = ", ".join(format_word(r, p.generators) for r in p.relators)
    return f"gens: {','.join(p.generators)} ; rels: {rels}".rstrip()


def presentation_to_json(p: Presentation) -> str:
    payload = {
        "generators": list(p.generators),
        "relators": [[[p.generators[g], e] for g, e in r.syllables] for r in p.relators],
    }
    return json.dumps(payload, sort_keys=True)


def presentation_from_json(text: str) -> Presentation:
    try:
        payload = json.loads(text)
        generators = list(payload["generators"])
        relators = []
        for entry in payload["relators"]:
            syllables = []
            for name, exponent in entry:
                if name not in generators:
                    raise UnknownGenerator(f"Unknown generator '{name}' in relator")
                if not isinstance(exponent, int) or exponent == 0:
                    raise MalformedPresentation(f"Exponent must be a non-zero integer, got {exponent!r}")
                syllables.append((generators.index(name), exponent))
            relators.append(Word(syllables=tuple(syllables)))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        if isinstance(e, (UnknownGenerator, MalformedPresentation)):
            raise
        raise MalformedPresentation(f"Invalid presentation JSON: {e}")
    return presentation(generators, relators)


def parse_any(text: str, fmt: Optional[str] = None) -> Presentation:
    """Text or JSON presentation, sniffed when fmt is None"""
    stripped = text.strip()
    if fmt is None:
        fmt = 'json' if stripped.startswith('{') else 'text'
    if fmt == 'json':
        return presentation_from_json(stripped)
    if fmt == 'text':
        return parse_presentation(stripped)
    raise MalformedPresentation(f"Unknown presentation format '{fmt}'")
