"""Knot groups, longitudes and surgery groups from oriented diagrams.

Generators are the arcs of the diagram, named a, b, c, ... in arc order (x0,
x1, ... past 26 arcs). Arc 0 carries the basepoint meridian.
"""

import logging
import string
from typing import List

from surgery.groups.models import Presentation, Word
from surgery.groups.presentations import presentation, quotient_by_relator
from surgery.groups.words import format_word, free_reduce
from surgery.knots.codec import writhe
from surgery.knots.models import KnotDiagram
from .models import LongitudeWord, SurgerySpec

logger = logging.getLogger(__name__)


def arc_names(count: int) -> List[str]:
    if count <= len(string.ascii_lowercase):
        return list(string.ascii_lowercase[:count])
    return [f"x{i}" for i in range(count)]


def wirtinger(d: KnotDiagram) -> Presentation:
    """
    One generator per arc and, per crossing, the relator of
    out = over^-1 in over (positive) or out = over in over^-1 (negative).
    Relators that reduce to the identity (curls) are dropped.
    """
    relators = []
    for crossing in d.crossings:
        over = Word.power_of(crossing.over_arc, -crossing.sign)
        relator = over * Word.power_of(crossing.under_in_arc) * over.inverse() * Word.power_of(crossing.under_out_arc, -1)
        relator = free_reduce(relator)
        if not relator.is_empty:
            relators.append(relator)
    return presentation(arc_names(d.arc_count), relators)


def blackboard_longitude(d: KnotDiagram) -> LongitudeWord:
    """
    Walk once around the knot from the start of arc 0 and record, at each
    underpass, the over-arc generator raised to the crossing sign.
    """
    code = list(d.code)
    letters = []
    for token in code[1:] + code[:1]:
        if token.kind == 'U':
            crossing = d.crossings[token.crossing_label - 1]
            letters.append((crossing.over_arc, crossing.sign))
    return LongitudeWord.of(Word.from_letters(letters))


def framed_longitude(d: KnotDiagram, p: int) -> LongitudeWord:
    """Blackboard longitude followed by the meridian of arc 0 to the power p - writhe"""
    blackboard = blackboard_longitude(d).word
    correction = Word.power_of(0, p - writhe(d))
    longitude = LongitudeWord.of(free_reduce(blackboard * correction))
    logger.debug(f"Framed longitude p={p}: {format_word(longitude.word, arc_names(d.arc_count))}")
    return longitude


def surgery_group(s: SurgerySpec) -> Presentation:
    """Knot group modulo the normal closure of the framed longitude"""
    framing = writhe(s.diagram) if s.framing is None else s.framing
    return quotient_by_relator(wirtinger(s.diagram), framed_longitude(s.diagram, framing).word)
