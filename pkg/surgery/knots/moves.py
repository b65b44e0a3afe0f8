"""Reidemeister moves on the signed Gauss code of a diagram.

Additions are addressed by arc ids, removals and R3 by crossing ids (index into
`KnotDiagram.crossings`). Every move returns a freshly labeled diagram.
"""

import itertools
import logging
import random
from typing import Dict, List, Optional, Sequence, Tuple

from surgery.errors import MoveNotApplicable
from .codec import build_diagram, faces, is_planar
from .models import GaussCodeToken, KnotDiagram, Move

logger = logging.getLogger(__name__)


def _positions(code: Sequence[GaussCodeToken]) -> Dict[Tuple[int, str], int]:
    return {(token.crossing_label, token.kind): i for i, token in enumerate(code)}


def _adjacent(p: int, q: int, length: int) -> bool:
    return length > 1 and (abs(p - q) == 1 or {p, q} == {0, length - 1})


def _arc_opening(code: Sequence[GaussCodeToken], arc: int) -> int:
    """Position of the undercrossing token that starts `arc`"""
    openings = [i for i, token in enumerate(code) if token.kind == 'U']
    return openings[arc]


def _check_arc(d: KnotDiagram, arc: int):
    if not 0 <= arc < d.arc_count:
        raise MoveNotApplicable(f"Arc {arc} does not exist (diagram has {d.arc_count} arcs)")


def _check_crossing(d: KnotDiagram, crossing: int):
    if not 0 <= crossing < d.crossing_count:
        raise MoveNotApplicable(f"Crossing {crossing} does not exist (diagram has {d.crossing_count})")


def _insert_after_opening(code: List[GaussCodeToken], arc: int, tokens: List[GaussCodeToken]) -> List[GaussCodeToken]:
    if not code:
        return tokens + code
    at = _arc_opening(code, arc) + 1
    return code[:at] + tokens + code[at:]


def _token(kind: str, label: int, sign: int) -> GaussCodeToken:
    return GaussCodeToken(kind=kind, crossing_label=label, sign=sign)


def _r1_add(d: KnotDiagram, arc: int, sign: int) -> List[GaussCodeToken]:
    _check_arc(d, arc)
    label = d.crossing_count + 1
    return _insert_after_opening(list(d.code), arc, [_token('O', label, sign), _token('U', label, sign)])


def _r1_remove(d: KnotDiagram, crossing: int) -> List[GaussCodeToken]:
    _check_crossing(d, crossing)
    code = list(d.code)
    where = _positions(code)
    label = crossing + 1
    if not _adjacent(where[(label, 'O')], where[(label, 'U')], len(code)):
        raise MoveNotApplicable(f"Crossing {crossing} is not a curl")
    return [token for token in code if token.crossing_label != label]


def _edge_arcs(code: Sequence[GaussCodeToken]) -> List[int]:
    """Arc carrying each edge; edge p runs from token p to token p + 1"""
    arcs = []
    arc = -1
    for token in code:
        if token.kind == 'U':
            arc += 1
        arcs.append(arc)
    return arcs


def _arc_edges(code: Sequence[GaussCodeToken], arc: int) -> List[int]:
    if not code:
        # the crossingless circle is a single edge; insertions go at the front
        return [-1]
    return [p for p, owner in enumerate(_edge_arcs(code)) if owner == arc]


def face_neighbours(d: KnotDiagram, arc: int) -> List[int]:
    """Arcs that border a face together with `arc`, the arc itself included"""
    _check_arc(d, arc)
    if not d.code:
        return [arc]
    owners = _edge_arcs(d.code)
    found = set()
    for face in faces(d.code):
        arcs = {owners[edge] for edge in face}
        if arc in arcs:
            found |= arcs
    return sorted(found)


def _insert(code: List[GaussCodeToken], after: int, tokens: List[GaussCodeToken]) -> List[GaussCodeToken]:
    return code[:after + 1] + tokens + code[after + 1:]


def _finger(code: List[GaussCodeToken], over_edge: int, under_edge: int,
            overs: List[GaussCodeToken], unders: List[GaussCodeToken]) -> List[GaussCodeToken]:
    if over_edge == under_edge:
        return _insert(code, over_edge, overs + unders)
    if over_edge > under_edge:
        return _insert(_insert(code, over_edge, overs), under_edge, unders)
    return _insert(_insert(code, under_edge, unders), over_edge, overs)


def _r2_add(d: KnotDiagram, arc_a: int, arc_b: int) -> List[GaussCodeToken]:
    """
    Push a finger of arc_a over arc_b. Every edge pair, under-strand direction
    and sign pair is tried in a fixed order; the first planar code wins.
    """
    _check_arc(d, arc_a)
    _check_arc(d, arc_b)
    first, second = d.crossing_count + 1, d.crossing_count + 2
    code = list(d.code)

    for over_edge, under_edge in itertools.product(_arc_edges(code, arc_a), _arc_edges(code, arc_b)):
        for s in (1, -1):
            overs = [_token('O', first, s), _token('O', second, -s)]
            for unders in ([_token('U', first, s), _token('U', second, -s)],
                           [_token('U', second, -s), _token('U', first, s)]):
                candidate = _finger(code, over_edge, under_edge, overs, unders)
                if is_planar(candidate):
                    return candidate
    raise MoveNotApplicable(f"Arcs {arc_a} and {arc_b} share no face")


def _r2_pair(code: Sequence[GaussCodeToken], c1: int, c2: int) -> bool:
    where = _positions(code)
    label1, label2 = c1 + 1, c2 + 1
    if code[where[(label1, 'O')]].sign == code[where[(label2, 'O')]].sign:
        return False
    return (_adjacent(where[(label1, 'O')], where[(label2, 'O')], len(code))
            and _adjacent(where[(label1, 'U')], where[(label2, 'U')], len(code)))


def _r2_remove(d: KnotDiagram, c1: int, c2: int) -> List[GaussCodeToken]:
    _check_crossing(d, c1)
    _check_crossing(d, c2)
    if c1 == c2 or not _r2_pair(d.code, c1, c2):
        raise MoveNotApplicable(f"Crossings {c1} and {c2} are not a cancelling pair")
    drop = {c1 + 1, c2 + 1}
    return [token for token in d.code if token.crossing_label not in drop]


def _reduce(letters: List[int]) -> Tuple[int, ...]:
    stack: List[int] = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def _strand_outputs(code: Sequence[GaussCodeToken], strands: List[Tuple[int, int]]) -> Tuple[Tuple[int, ...], ...]:
    """
    Wirtinger values leaving each strand of a triangle, in the free group on the
    three incoming arcs (letters +-1, +-2, +-3).
    """
    over_strand = {}
    for s, (p, q) in enumerate(strands):
        for step, position in enumerate((p, q)):
            if code[position].kind == 'O':
                over_strand[code[position].crossing_label] = (s, step)

    cache: Dict[Tuple[int, int], Tuple[int, ...]] = {}

    def value(s: int, step: int) -> Tuple[int, ...]:
        # value of strand s just before its token number `step`
        if (s, step) in cache:
            return cache[(s, step)]
        if step == 0:
            result = (s + 1,)
        else:
            token = code[strands[s][step - 1]]
            before = list(value(s, step - 1))
            if token.kind == 'O':
                result = tuple(before)
            else:
                over = value(*over_strand[token.crossing_label])
                inverse = [-letter for letter in reversed(over)]
                if token.sign > 0:
                    result = _reduce(inverse + before + list(over))
                else:
                    result = _reduce(list(over) + before + inverse)
        cache[(s, step)] = result
        return result

    return tuple(value(s, 2) for s in range(len(strands)))


def _r3_swap(code: Sequence[GaussCodeToken], triple: Sequence[int]) -> Optional[List[GaussCodeToken]]:
    """Return the code with the triangle on `triple` moved across, or None"""
    labels = {c + 1 for c in triple}
    if len(labels) != 3:
        return None
    positions = [i for i, token in enumerate(code) if token.crossing_label in labels]
    length = len(code)
    pairs = [(p, q) for p, q in itertools.combinations(positions, 2)
             if _adjacent(p, q, length) and code[p].crossing_label != code[q].crossing_label]
    triangles = {frozenset(face) for face in faces(code) if len(face) == 3}

    for matching in itertools.combinations(pairs, 3):
        used = [p for pair in matching for p in pair]
        if len(set(used)) != 6:
            continue
        kinds = sorted(''.join(sorted(code[p].kind + code[q].kind)) for p, q in matching)
        if kinds != ['OO', 'OU', 'UU']:
            continue

        strands = []
        for p, q in matching:
            # traversal order along the strand, across the wrap-around
            strands.append((q, p) if (p == 0 and q == length - 1) else (p, q))
        if frozenset(p for p, _ in strands) not in triangles:
            continue

        swapped = list(code)
        for p, q in strands:
            swapped[p], swapped[q] = code[q], code[p]

        if is_planar(swapped) and _strand_outputs(code, strands) == _strand_outputs(swapped, strands):
            return swapped
    return None


def _r3(d: KnotDiagram, c1: int, c2: int, c3: int) -> List[GaussCodeToken]:
    for crossing in (c1, c2, c3):
        _check_crossing(d, crossing)
    swapped = _r3_swap(d.code, (c1, c2, c3))
    if swapped is None:
        raise MoveNotApplicable(f"Crossings {c1}, {c2}, {c3} do not bound a movable triangle")
    return swapped


def reidemeister_apply(d: KnotDiagram, move: Move) -> KnotDiagram:
    """
    Apply one Reidemeister move.

    Args:
        d: Source diagram
        move: The move and its site

    Returns:
        Diagram of the same knot; writhe changes by the curl sign under R1 only
    """
    if move.kind == 'R1_add':
        code = _r1_add(d, move.arcs[0], move.sign)
    elif move.kind == 'R1_remove':
        code = _r1_remove(d, move.crossings[0])
    elif move.kind == 'R2_add':
        code = _r2_add(d, *move.arcs)
    elif move.kind == 'R2_remove':
        code = _r2_remove(d, *move.crossings)
    else:
        code = _r3(d, *move.crossings)

    result = build_diagram(code)
    logger.debug(f"{move}: {d.crossing_count} -> {result.crossing_count} crossings")
    return result


def find_moves(d: KnotDiagram) -> List[Move]:
    """All applicable R1_remove, R2_remove and R3 sites, in a fixed order"""
    code = d.code
    where = _positions(code)
    length = len(code)
    moves = []

    for c in range(d.crossing_count):
        if _adjacent(where[(c + 1, 'O')], where[(c + 1, 'U')], length):
            moves.append(Move.r1_remove(c))

    for c1, c2 in itertools.combinations(range(d.crossing_count), 2):
        if _r2_pair(code, c1, c2):
            moves.append(Move.r2_remove(c1, c2))

    seen = set()
    for p in range(length):
        q = (p + 1) % length
        if length < 6 or code[p].kind != 'O' or code[q].kind != 'O':
            continue
        i, j = code[p].crossing_label - 1, code[q].crossing_label - 1
        for k in range(d.crossing_count):
            triple = tuple(sorted({i, j, k}))
            if len(triple) != 3 or triple in seen:
                continue
            if _r3_swap(code, triple) is not None:
                seen.add(triple)
                moves.append(Move.r3(*triple))
    return moves


def random_moves(d: KnotDiagram, count: int, seed: int = 0) -> KnotDiagram:
    """
    Apply `count` random moves with a seeded RNG: curls, finger moves between
    arcs on a common face, and any removal or R3 site found in the current diagram.
    """
    rng = random.Random(seed)
    history = []
    for _ in range(count):
        found = find_moves(d)
        options = ['R1_add', 'R2_add'] + (['found'] if found else [])
        choice = rng.choice(options)
        if choice == 'R1_add':
            move = Move.r1_add(rng.randrange(d.arc_count), rng.choice((1, -1)))
        elif choice == 'R2_add':
            arc_a = rng.randrange(d.arc_count)
            arc_b = rng.choice(face_neighbours(d, arc_a))
            move = Move.r2_add(arc_a, arc_b)
        else:
            move = rng.choice(found)
        d = reidemeister_apply(d, move)
        history.append(str(move))
    logger.debug(f"Random moves (seed={seed}): {', '.join(history)}")
    return d
