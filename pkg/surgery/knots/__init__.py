"""Knot diagrams: models, text/JSON codecs, Reidemeister moves and a small named corpus."""

from .catalog import FIGURE_EIGHT_PD, TREFOIL_PD, catalog, catalog_names
from .codec import (
    build_diagram,
    dump_json,
    faces,
    format_code,
    is_planar,
    load_json,
    parse_diagram,
    parse_gauss,
    parse_pd,
    parse_tokens,
    serialize,
    writhe,
)
from .models import Crossing, GaussCodeToken, KnotDiagram, Move
from .moves import face_neighbours, find_moves, random_moves, reidemeister_apply

__all__ = [
    'Crossing',
    'GaussCodeToken',
    'KnotDiagram',
    'Move',
    'build_diagram',
    'catalog',
    'catalog_names',
    'dump_json',
    'face_neighbours',
    'faces',
    'find_moves',
    'format_code',
    'is_planar',
    'load_json',
    'parse_diagram',
    'parse_gauss',
    'parse_pd',
    'parse_tokens',
    'random_moves',
    'reidemeister_apply',
    'serialize',
    'writhe',
    'TREFOIL_PD',
    'FIGURE_EIGHT_PD',
]
