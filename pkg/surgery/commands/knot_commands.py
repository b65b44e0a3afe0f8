import json
import logging

from surgery.config import Config
from surgery.knots.codec import dump_json, format_code, serialize, writhe
from surgery.knots.moves import find_moves, random_moves
from .common import emit, load_diagram

logger = logging.getLogger(__name__)


def _diagram_text(diagram, fmt: str) -> str:
    return dump_json(diagram) if fmt == 'json' else format_code(diagram.code)


def parse_command(args) -> int:
    emit(_diagram_text(load_diagram(args), args.format))
    return 0


def validate_command(args) -> int:
    """Parse and report the counts; any inconsistency surfaces as an input error"""
    diagram = load_diagram(args)
    emit(json.dumps({
        "arcs": diagram.arc_count,
        "crossings": diagram.crossing_count,
        "valid": True,
        "writhe": writhe(diagram),
    }, sort_keys=True))
    return 0


def writhe_command(args) -> int:
    emit(str(writhe(load_diagram(args))))
    return 0


def canon_command(args) -> int:
    emit(serialize(load_diagram(args)))
    return 0


def json_command(args) -> int:
    emit(dump_json(load_diagram(args)))
    return 0


def moves_command(args) -> int:
    moves = find_moves(load_diagram(args))
    emit("\n".join(str(move) for move in moves))
    return 0


def scramble_command(args) -> int:
    seed = Config.SEED if args.scramble_seed is None else args.scramble_seed
    diagram = random_moves(load_diagram(args), args.moves, seed)
    logger.info(f"Scrambled with {args.moves} moves (seed {seed}): {diagram.crossing_count} crossings")
    emit(_diagram_text(diagram, args.format))
    return 0


def register(subparsers, diagram_input):
    knot = subparsers.add_parser('knot', help='Knot diagram codecs and Reidemeister moves')
    commands = knot.add_subparsers(dest='action', required=True)

    def add(name, handler, help_text, formats=False):
        parser = commands.add_parser(name, parents=[diagram_input], help=help_text)
        if formats:
            parser.add_argument('--format', choices=['gauss', 'json'], default='gauss')
        parser.set_defaults(handler=handler)
        return parser

    add('parse', parse_command, 'Parse a diagram and re-emit it', formats=True)
    add('validate', validate_command, 'Check a diagram and summarize it')
    add('writhe', writhe_command, 'Signed crossing count')
    add('canon', canon_command, 'Canonical signed Gauss code')
    add('json', json_command, 'Diagram as JSON')
    add('moves', moves_command, 'Applicable removal and R3 moves')
    scramble = add('scramble', scramble_command, 'Apply random Reidemeister moves', formats=True)
    scramble.add_argument('--moves', type=int, default=5)
    scramble.add_argument('--seed', dest='scramble_seed', type=int, default=None)
