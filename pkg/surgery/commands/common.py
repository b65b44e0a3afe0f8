"""Input plumbing shared by the subcommands: reading files or stdin, list flags, group sniffing."""

import json
import logging
import sys
from typing import List, Optional

from surgery.errors import UsageError
from surgery.framing.wirtinger import wirtinger
from surgery.groups.models import Presentation
from surgery.groups.presentations import parse_presentation, presentation_from_json
from surgery.knots.catalog import catalog
from surgery.knots.codec import parse_diagram
from surgery.knots.models import KnotDiagram

logger = logging.getLogger(__name__)


def read_text(path: Optional[str]) -> str:
    """Contents of `path`, or stdin for None and '-'"""
    if path is None or path == '-':
        return sys.stdin.read()
    try:
        with open(path, 'r', encoding='utf-8') as handle:
            return handle.read()
    except OSError as e:
        raise UsageError(f"Cannot read '{path}': {e.strerror}")


def emit(text: str):
    """Write one result to stdout, newline-terminated"""
    sys.stdout.write(text if text.endswith('\n') else text + '\n')


def parse_floats(text: str, flag: str) -> List[float]:
    try:
        return [float(v) for v in text.split(',') if v.strip()]
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated numbers, got '{text}'")


def parse_ints(text: str, flag: str) -> List[int]:
    try:
        return [int(v) for v in text.split(',') if v.strip()]
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated integers, got '{text}'")


def load_diagram(args) -> KnotDiagram:
    """The diagram named by --knot, or parsed from the positional input"""
    if getattr(args, 'knot', None):
        return catalog(args.knot)
    return parse_diagram(read_text(args.input), getattr(args, 'input_format', None))


def _is_presentation_json(stripped: str) -> bool:
    try:
        payload = json.loads(stripped)
    except json.JSONDecodeError:
        return False
    return isinstance(payload, dict) and "generators" in payload


def group_from_text(text: str) -> Presentation:
    """
    A presentation in text or JSON form; any knot diagram is read as its
    knot group.
    """
    stripped = text.strip()
    if stripped.startswith('gens'):
        return parse_presentation(stripped)
    if stripped.startswith('{') and _is_presentation_json(stripped):
        return presentation_from_json(stripped)
    logger.debug("Input is not a presentation, reading it as a knot diagram")
    return wirtinger(parse_diagram(stripped))


def load_group(args, attribute: str = 'input') -> Presentation:
    if getattr(args, 'knot', None) and attribute == 'input':
        return wirtinger(catalog(args.knot))
    return group_from_text(read_text(getattr(args, attribute)))
