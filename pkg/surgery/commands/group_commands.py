import json
import logging

from surgery.analysis.coset_table import group_order, todd_coxeter
from surgery.analysis.homs import count_homs, count_surjections, distinguish, iter_homs
from surgery.errors import ComputationInconclusive
from surgery.framing.constructors import connected_sum, connected_sum_group, lens_space_group, polyhedral_group
from surgery.framing.models import SurgerySpec
from surgery.framing.wirtinger import arc_names, blackboard_longitude, framed_longitude, surgery_group, wirtinger
from surgery.groups.presentations import (
    direct_product,
    format_presentation,
    free_product,
    presentation_to_json,
    tietze_eliminate,
)
from surgery.groups.snf import abelianize
from surgery.groups.words import format_word
from .common import emit, load_diagram, load_group

logger = logging.getLogger(__name__)


def _emit_presentation(p, args):
    if getattr(args, 'simplify', False):
        p = tietze_eliminate(p)
    emit(presentation_to_json(p) if args.format == 'json' else format_presentation(p))


def wirtinger_command(args) -> int:
    _emit_presentation(wirtinger(load_diagram(args)), args)
    return 0


def longitude_command(args) -> int:
    diagram = load_diagram(args)
    if args.framing is None:
        longitude = blackboard_longitude(diagram)
    else:
        longitude = framed_longitude(diagram, args.framing)
    word = format_word(longitude.word, arc_names(diagram.arc_count))
    if args.format == 'json':
        emit(json.dumps({"exponent_sum": longitude.exponent_sum, "word": word}, sort_keys=True))
    else:
        emit(word)
    return 0


def surgery_command(args) -> int:
    spec = SurgerySpec(diagram=load_diagram(args), framing=args.framing)
    _emit_presentation(surgery_group(spec), args)
    return 0


def abelianize_command(args) -> int:
    invariants = abelianize(load_group(args))
    if args.format == 'json':
        emit(json.dumps(invariants.model_dump(), sort_keys=True))
    else:
        emit(str(invariants))
    return 0


def order_command(args) -> int:
    p = load_group(args)
    result = todd_coxeter(p, args.max_cosets) if args.no_simplify else group_order(p, args.max_cosets)
    emit(result.to_json())
    if not result.is_finite:
        raise ComputationInconclusive(f"Coset enumeration stopped after {result.cosets_used} cosets without closing")
    return 0


def homs_command(args) -> int:
    p = tietze_eliminate(load_group(args))
    if args.list:
        emit("\n".join(json.dumps([list(image) for image in hom]) for hom in iter_homs(p, args.sym)))
        return 0
    emit(json.dumps({
        "homs": count_homs(p, args.sym),
        "n": args.sym,
        "surjections": count_surjections(p, args.sym),
    }, sort_keys=True))
    return 0


def distinguish_command(args) -> int:
    verdict = distinguish(load_group(args, 'left'), load_group(args, 'right'), args.max_cosets)
    emit(verdict.to_json())
    if verdict.is_inconclusive:
        raise ComputationInconclusive(f"Not compared: {', '.join(verdict.skipped)}")
    return 0


def product_command(args) -> int:
    left, right = load_group(args), load_group(args, 'other')
    combine = direct_product if args.kind == 'direct' else free_product
    _emit_presentation(combine(left, right), args)
    return 0


def polyhedral_command(args) -> int:
    _emit_presentation(polyhedral_group(args.l, args.m, args.n), args)
    return 0


def lens_command(args) -> int:
    _emit_presentation(lens_space_group(args.p), args)
    return 0


def connected_sum_command(args) -> int:
    p = load_group(args)
    if args.other is None:
        _emit_presentation(connected_sum_group(p), args)
    else:
        _emit_presentation(connected_sum(p, load_group(args, 'other')), args)
    return 0


def register(subparsers, diagram_input, group_input, presentation_output):
    group = subparsers.add_parser('group', help='Knot groups, surgery groups and their invariants')
    commands = group.add_subparsers(dest='action', required=True)

    parser = commands.add_parser('wirtinger', parents=[diagram_input, presentation_output], help='Knot group of a diagram')
    parser.set_defaults(handler=wirtinger_command)

    parser = commands.add_parser('longitude', parents=[diagram_input], help='Blackboard or framed longitude word')
    parser.add_argument('--framing', type=int, default=None)
    parser.add_argument('--format', choices=['text', 'json'], default='text')
    parser.set_defaults(handler=longitude_command)

    parser = commands.add_parser('surgery', parents=[diagram_input, presentation_output], help='Group of the surgered manifold')
    parser.add_argument('--framing', type=int, default=None, help='Surgery coefficient (the writhe when omitted)')
    parser.set_defaults(handler=surgery_command)

    parser = commands.add_parser('abelianize', parents=[group_input], help='First homology')
    parser.add_argument('--format', choices=['text', 'json'], default='text')
    parser.set_defaults(handler=abelianize_command)

    parser = commands.add_parser('order', parents=[group_input], help='Group order by coset enumeration')
    parser.add_argument('--max-cosets', type=int, default=None)
    parser.add_argument('--no-simplify', action='store_true', help='Skip Tietze elimination')
    parser.set_defaults(handler=order_command)

    parser = commands.add_parser('homs', parents=[group_input], help='Homomorphisms into a symmetric group')
    parser.add_argument('--sym', type=int, required=True, help='Degree n of S_n')
    parser.add_argument('--list', action='store_true', help='Print every homomorphism')
    parser.set_defaults(handler=homs_command)

    parser = commands.add_parser('distinguish', help='Try to tell two groups apart')
    parser.add_argument('left')
    parser.add_argument('right')
    parser.add_argument('--max-cosets', type=int, default=None)
    parser.set_defaults(handler=distinguish_command)

    parser = commands.add_parser('product', parents=[group_input, presentation_output], help='Free or direct product')
    parser.add_argument('--with', dest='other', required=True)
    parser.add_argument('--kind', choices=['free', 'direct'], default='free')
    parser.set_defaults(handler=product_command)

    parser = commands.add_parser('polyhedral', parents=[presentation_output], help='Binary polyhedral group <l,m,n>')
    for name in ('l', 'm', 'n'):
        parser.add_argument(name, type=int)
    parser.set_defaults(handler=polyhedral_command)

    parser = commands.add_parser('lens', parents=[presentation_output], help='Group of the lens space L(p,1)')
    parser.add_argument('p', type=int)
    parser.set_defaults(handler=lens_command)

    parser = commands.add_parser('connected-sum', parents=[group_input, presentation_output], help='Group of M # (S^1 x S^2), or of M # N with --with')
    parser.add_argument('--with', dest='other', default=None)
    parser.set_defaults(handler=connected_sum_command)
