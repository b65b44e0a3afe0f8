"""Text and JSON codecs for oriented knot diagrams.

Gauss codes: comma-separated tokens `U1+`, `O2-`, ... where the trailing sign is
the crossing sign (writhe convention). PD codes: tuples `X(a,b,c,d)` listed from
the incoming under-strand, counterclockwise; the crossing is positive when the
over-strand runs from the b slot to the d slot.
"""

import json
import logging
import re
from collections import Counter, defaultdict
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from surgery.errors import InconsistentCode, MalformedToken, MalformedTuple, OrientationInconsistent
from .models import Crossing, GaussCodeToken, KnotDiagram

logger = logging.getLogger(__name__)

TOKEN_PATTERN = re.compile(r'^([OUou])\s*(\d+)\s*([+-])$')
TUPLE_PATTERN = re.compile(r'X\s*[\(\[]([^\)\]]*)[\)\]]')

UNDER_IN, OVER_B, UNDER_OUT, OVER_D = 0, 1, 2, 3


def format_code(tokens: Iterable[GaussCodeToken]) -> str:
    return ",".join(str(token) for token in tokens)


def _relabel(tokens: Sequence[GaussCodeToken]) -> List[GaussCodeToken]:
    """Renumber crossings 1, 2, ... in order of first appearance"""
    mapping: Dict[int, int] = {}
    relabeled = []
    for token in tokens:
        if token.crossing_label not in mapping:
            mapping[token.crossing_label] = len(mapping) + 1
        relabeled.append(GaussCodeToken(kind=token.kind, crossing_label=mapping[token.crossing_label], sign=token.sign))
    return relabeled


HalfEdge = Tuple[int, int]


def _rotation_system(code: Sequence[GaussCodeToken]) -> Dict[HalfEdge, HalfEdge]:
    """
    Counterclockwise successor of every half-edge around its crossing.

    Edge p runs from token p to token p + 1 (cyclically); (p, 0) is its end at
    token p and (p, 1) its end at token p + 1. The four ends run in PD tuple
    order, so a positive crossing has its incoming over end second.
    """
    length = len(code)
    where = {(token.crossing_label, token.kind): i for i, token in enumerate(code)}
    successor: Dict[HalfEdge, HalfEdge] = {}
    for (label, kind), under in where.items():
        if kind != 'U':
            continue
        over = where[(label, 'O')]
        under_in, under_out = ((under - 1) % length, 1), (under, 0)
        over_in, over_out = ((over - 1) % length, 1), (over, 0)
        if code[under].sign > 0:
            ring = (under_in, over_in, under_out, over_out)
        else:
            ring = (under_in, over_out, under_out, over_in)
        for k in range(4):
            successor[ring[k]] = ring[(k + 1) % 4]
    return successor


def faces(code: Sequence[GaussCodeToken]) -> List[List[int]]:
    """Edges around each face of the diagram the code draws on the sphere"""
    if not code:
        return []
    successor = _rotation_system(code)
    seen = set()
    result = []
    for start in sorted(successor):
        if start in seen:
            continue
        face = []
        half = start
        while half not in seen:
            seen.add(half)
            face.append(half[0])
            half = successor[(half[0], 1 - half[1])]
        result.append(face)
    return result


def _odd_interlacing(code: Sequence[GaussCodeToken]) -> Optional[int]:
    """A crossing label met by an odd number of other crossings between its two passes"""
    first: Dict[int, int] = {}
    for i, token in enumerate(code):
        label = token.crossing_label
        if label not in first:
            first[label] = i
            continue
        between = Counter(t.crossing_label for t in code[first[label] + 1:i])
        if sum(1 for count in between.values() if count == 1) % 2:
            return label
    return None


def is_planar(code: Sequence[GaussCodeToken]) -> bool:
    """Euler check: a connected diagram with n crossings on the sphere has n + 2 faces"""
    if not code:
        return True
    return _odd_interlacing(code) is None and len(faces(code)) == len(code) // 2 + 2


def _check_planar(code: Sequence[GaussCodeToken]):
    label = _odd_interlacing(code)
    if label is not None:
        raise InconsistentCode(f"Crossing {label} is interlaced with an odd number of crossings; the code is not planar")
    count = len(faces(code))
    if count != len(code) // 2 + 2:
        raise InconsistentCode(f"Code bounds {count} faces, a planar diagram with {len(code) // 2} crossings has {len(code) // 2 + 2}")


def build_diagram(tokens: Sequence[GaussCodeToken]) -> KnotDiagram:
    """
    Validate a single-component signed Gauss code and derive arcs and crossings.

    Arc 0 is the arc following the first undercrossing of the code; arcs are
    numbered in traversal order.
    """
    if not tokens:
        return KnotDiagram()

    kinds = defaultdict(list)
    for token in tokens:
        kinds[token.crossing_label].append(token)

    for label, seen in sorted(kinds.items()):
        if len(seen) != 2:
            raise InconsistentCode(f"Crossing {label} appears {len(seen)} times, expected exactly 2")
        if sorted(token.kind for token in seen) != ['O', 'U']:
            raise InconsistentCode(f"Crossing {label} must appear once as O and once as U")
        if seen[0].sign != seen[1].sign:
            raise InconsistentCode(f"Crossing {label} has mismatched signs")

    start = next(i for i, token in enumerate(tokens) if token.kind == 'U')
    code = _relabel(list(tokens[start:]) + list(tokens[:start]))
    _check_planar(code)
    n = len(kinds)

    over = [0] * n
    under_in = [0] * n
    under_out = [0] * n
    current = 0
    for token in code[1:]:
        index = token.crossing_label - 1
        if token.kind == 'O':
            over[index] = current
        else:
            under_in[index] = current
            current += 1
            under_out[index] = current
    opening = code[0].crossing_label - 1
    under_in[opening] = current
    under_out[opening] = 0

    if current != n - 1:
        raise InconsistentCode(f"Traversal produced {current + 1} arcs for {n} crossings")

    signs = {token.crossing_label: token.sign for token in code}
    crossings = tuple(
        Crossing(sign=signs[i + 1], over_arc=over[i], under_in_arc=under_in[i], under_out_arc=under_out[i])
        for i in range(n)
    )
    return KnotDiagram(crossings=crossings, arc_count=n, arc_order=tuple(range(n)), code=tuple(code))


def _split_components(text: str) -> List[str]:
    return [part.strip() for part in re.split(r'[;\n]', text) if part.strip()]


def parse_tokens(text: str) -> List[GaussCodeToken]:
    components = _split_components(text)
    if not components:
        return []
    if len(components) > 1:
        raise InconsistentCode(f"Expected a single knot component, found {len(components)}")

    tokens = []
    for raw in components[0].split(','):
        match = TOKEN_PATTERN.match(raw.strip())
        if not match:
            raise MalformedToken(f"Cannot parse Gauss token '{raw.strip()}'")
        kind, label, sign = match.groups()
        if int(label) < 1:
            raise MalformedToken(f"Crossing labels start at 1, got '{raw.strip()}'")
        tokens.append(GaussCodeToken(kind=kind.upper(), crossing_label=int(label), sign=1 if sign == '+' else -1))
    return tokens


def parse_gauss(text: str) -> KnotDiagram:
    """
    Parse a signed Gauss code such as "U1+,O2+,U3+,O1+,U2+,O3+".

    Args:
        text: Comma-separated tokens; empty text is the crossingless unknot

    Returns:
        Validated KnotDiagram
    """
    diagram = build_diagram(parse_tokens(text))
    logger.debug(f"Parsed Gauss code with {diagram.crossing_count} crossings")
    return diagram


def _parse_pd_tuples(text: str) -> List[Tuple[int, int, int, int]]:
    body = text.strip()
    wrapper = re.fullmatch(r'PD\s*[\(\[](.*)[\)\]]', body, re.DOTALL)
    if wrapper:
        body = wrapper.group(1)

    tuples = []
    for match in TUPLE_PATTERN.finditer(body):
        entries = [entry.strip() for entry in match.group(1).split(',')]
        if len(entries) != 4:
            raise MalformedTuple(f"Expected 4 entries in '{match.group(0)}'")
        try:
            tuples.append(tuple(int(entry) for entry in entries))
        except ValueError:
            raise MalformedTuple(f"Non-integer entry in '{match.group(0)}'")

    leftover = TUPLE_PATTERN.sub('', body)
    if leftover.replace(',', '').strip():
        raise MalformedTuple(f"Unexpected text in PD code: '{leftover.strip()}'")
    return tuples


def parse_pd(text: str) -> KnotDiagram:
    """
    Parse a planar-diagram code "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)".

    Edge orientation is propagated from the under-strands (a -> c) through the
    over-strands; crossing signs follow from the direction of the over-strand.
    """
    tuples = _parse_pd_tuples(text)
    if not tuples:
        return KnotDiagram()

    slots = defaultdict(list)
    for index, entries in enumerate(tuples):
        for position, edge in enumerate(entries):
            slots[edge].append((index, position))

    for edge, places in slots.items():
        if len(places) != 2:
            raise OrientationInconsistent(f"Edge {edge} appears {len(places)} times, expected 2")

    # True = the edge enters the crossing at this slot
    incoming: Dict[Tuple[int, int], bool] = {}

    def assign(slot: Tuple[int, int], value: bool, pending: List[Tuple[int, int]]):
        if slot in incoming:
            if incoming[slot] != value:
                raise OrientationInconsistent(f"Edges at crossing {slot[0] + 1} cannot be oriented consistently")
            return
        incoming[slot] = value
        pending.append(slot)

    pending: List[Tuple[int, int]] = []
    for index in range(len(tuples)):
        assign((index, UNDER_IN), True, pending)
        assign((index, UNDER_OUT), False, pending)

    while pending:
        index, position = pending.pop()
        value = incoming[(index, position)]
        edge = tuples[index][position]
        first, second = slots[edge]
        other = second if first == (index, position) else first
        assign(other, not value, pending)
        if position in (OVER_B, OVER_D):
            assign((index, OVER_D if position == OVER_B else OVER_B), not value, pending)

    if len(incoming) != 4 * len(tuples):
        raise OrientationInconsistent("Some over-strands cannot be oriented from the under-strands")

    signs = [1 if incoming[(index, OVER_B)] else -1 for index in range(len(tuples))]

    def head(edge: int) -> Tuple[int, int]:
        return next(slot for slot in slots[edge] if incoming[slot])

    start = min(slots)
    tokens = []
    edge = start
    visited = 0
    while True:
        index, position = head(edge)
        kind = 'U' if position == UNDER_IN else 'O'
        tokens.append(GaussCodeToken(kind=kind, crossing_label=index + 1, sign=signs[index]))
        visited += 1
        edge = tuples[index][(position + 2) % 4]
        if edge == start:
            break
        if visited > len(slots):
            raise OrientationInconsistent("Edge sequence does not close up")

    if visited != len(slots):
        raise InconsistentCode(f"PD code has more than one component ({visited} of {len(slots)} edges traversed)")

    diagram = build_diagram(tokens)
    logger.debug(f"Parsed PD code with {diagram.crossing_count} crossings")
    return diagram


def writhe(d: KnotDiagram) -> int:
    """Sum of crossing signs, the blackboard framing number"""
    return sum(crossing.sign for crossing in d.crossings)


def serialize(d: KnotDiagram) -> str:
    """
    Canonical signed Gauss code: the lexicographically least string over all
    starting undercrossings, crossings relabeled by first appearance.
    """
    code = list(d.code)
    if not code:
        return ""
    candidates = []
    for start, token in enumerate(code):
        if token.kind == 'U':
            candidates.append(format_code(_relabel(code[start:] + code[:start])))
    return min(candidates)


def dump_json(d: KnotDiagram) -> str:
    payload = {
        "arcs": d.arc_count,
        "code": format_code(d.code),
        "crossings": [
            {"over": c.over_arc, "sign": c.sign, "under_in": c.under_in_arc, "under_out": c.under_out_arc}
            for c in d.crossings
        ],
    }
    return json.dumps(payload, sort_keys=True)


def _crossings_from_payload(payload: dict) -> List[Crossing]:
    crossings = []
    for entry in payload.get("crossings", []):
        try:
            crossings.append(Crossing(
                sign=entry["sign"],
                over_arc=entry["over"],
                under_in_arc=entry["under_in"],
                under_out_arc=entry["under_out"],
            ))
        except (KeyError, TypeError, ValueError) as e:
            raise InconsistentCode(f"Invalid crossing entry {entry}: {e}")
    return crossings


def _traversal_from_crossings(arcs: int, crossings: Sequence[Crossing]) -> List[GaussCodeToken]:
    n = len(crossings)
    if n == 0:
        if arcs != 1:
            raise InconsistentCode(f"A crossingless diagram has 1 arc, got {arcs}")
        return []
    if arcs != n:
        raise InconsistentCode(f"A knot diagram with {n} crossings has {n} arcs, got {arcs}")

    for c in crossings:
        if max(c.over_arc, c.under_in_arc, c.under_out_arc) >= arcs:
            raise InconsistentCode(f"Arc id out of range in {c}")

    ins = Counter(c.under_in_arc for c in crossings)
    outs = Counter(c.under_out_arc for c in crossings)
    if any(ins[a] != 1 or outs[a] != 1 for a in range(arcs)):
        raise InconsistentCode("Each arc must end at exactly one and start at exactly one undercrossing")

    starts = {c.under_out_arc: i for i, c in enumerate(crossings)}
    ends = {c.under_in_arc: i for i, c in enumerate(crossings)}
    overpasses = defaultdict(list)
    for i, c in enumerate(crossings):
        overpasses[c.over_arc].append(i)

    first = starts[0]
    tokens = [GaussCodeToken(kind='U', crossing_label=first + 1, sign=crossings[first].sign)]
    arc = 0
    visited = 0
    while True:
        visited += 1
        for i in overpasses[arc]:
            tokens.append(GaussCodeToken(kind='O', crossing_label=i + 1, sign=crossings[i].sign))
        end = ends[arc]
        if end == first:
            break
        tokens.append(GaussCodeToken(kind='U', crossing_label=end + 1, sign=crossings[end].sign))
        arc = crossings[end].under_out_arc

    if visited != arcs:
        raise InconsistentCode(f"Crossings describe more than one component ({visited} of {arcs} arcs reached)")
    return tokens


def load_json(text: str) -> KnotDiagram:
    """
    Read {"arcs": n, "crossings": [...]} with an optional traversal "code".
    Without "code", overpasses along one arc are ordered by crossing index.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedToken(f"Invalid diagram JSON: {e}")
    if not isinstance(payload, dict) or "arcs" not in payload:
        raise InconsistentCode("Diagram JSON must be an object with an 'arcs' key")

    crossings = _crossings_from_payload(payload)
    if payload.get("code") is not None:
        diagram = parse_gauss(payload["code"])
        if diagram.arc_count != payload["arcs"] or list(diagram.crossings) != crossings:
            raise InconsistentCode("'code' does not match the listed arcs and crossings")
        return diagram

    return build_diagram(_traversal_from_crossings(payload["arcs"], crossings))


def parse_diagram(text: str, fmt: Optional[str] = None) -> KnotDiagram:
    """Parse any supported diagram format, sniffing it when fmt is None"""
    stripped = text.strip()
    if fmt is None:
        if stripped.startswith('{'):
            fmt = 'json'
        elif 'X' in stripped:
            fmt = 'pd'
        else:
            fmt = 'gauss'

    if fmt == 'json':
        return load_json(stripped)
    if fmt == 'pd':
        return parse_pd(stripped)
    if fmt == 'gauss':
        return parse_gauss(stripped)
    raise MalformedToken(f"Unknown diagram format '{fmt}'")
