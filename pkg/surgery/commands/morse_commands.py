import json
import logging
from typing import List, Optional, Tuple

import numpy as np

from surgery.config import Config
from surgery.errors import InvariantViolation
from surgery.morse.components import count_components
from surgery.morse.export import clouds_to_csv, load_csv, load_json_sample, write_samples
from surgery.morse.forms import evaluate, gradient, gradient_check, hessian_index
from surgery.morse.geometry import revolve, stereographic_inverse, stereographic_project
from surgery.morse.models import MorseForm, PointCloud
from surgery.morse.sampling import core_view, sample_level_set, surgery_sequence, t_range
from .common import emit, parse_floats, parse_ints, read_text

logger = logging.getLogger(__name__)

INTERIOR = 0.99


def _form(args) -> MorseForm:
    return MorseForm(ambient_dim=args.dim, index=args.index, time_reversed=args.reversed)


def _fmt(value: float) -> str:
    return repr(float(value))


def read_clouds(text: str) -> List[Tuple[Optional[float], PointCloud]]:
    """Samples in JSON or points in CSV, as (t, cloud) pairs"""
    stripped = text.strip()
    if stripped.startswith('[') or stripped.startswith('{'):
        return [(sample.t, sample.cloud) for sample in load_json_sample(stripped)]
    return load_csv(stripped)


def eval_command(args) -> int:
    emit(_fmt(evaluate(_form(args), parse_floats(args.point, '--point'))))
    return 0


def grad_command(args) -> int:
    emit(",".join(_fmt(v) for v in gradient(_form(args), parse_floats(args.point, '--point'))))
    return 0


def index_command(args) -> int:
    emit(str(hessian_index(_form(args))))
    return 0


def check_gradient_command(args) -> int:
    """Gradient check at random interior points of the disc"""
    form = _form(args)
    rng = np.random.default_rng(Config.SEED)
    directions = rng.standard_normal((args.points, form.ambient_dim))
    directions /= np.linalg.norm(directions, axis=1)[:, None]
    radii = INTERIOR * rng.random(args.points) ** (1.0 / form.ambient_dim)
    errors = [gradient_check(form, x) for x in directions * radii[:, None]]
    worst = max(errors) if errors else 0.0
    emit(json.dumps({"max_error": worst, "points": args.points, "tolerance": Config.GRADIENT_TOL}, sort_keys=True))
    if worst > Config.GRADIENT_TOL:
        raise InvariantViolation(f"Gradient error {worst:.3g} exceeds {Config.GRADIENT_TOL} for {form}")
    return 0


def levels_command(args) -> int:
    form = _form(args)
    samples = [sample_level_set(form, t, args.resolution) for t in parse_floats(args.t_list, '--t-list')]
    emit(write_samples(samples, args.format))
    return 0


def sequence_command(args) -> int:
    samples = surgery_sequence(_form(args), t_range(args.t_from, args.t_to, args.t_steps), args.resolution)
    logger.info(f"Sampled {len(samples)} levels, {sum(len(s.points) for s in samples)} points")
    emit(write_samples(samples, args.format))
    return 0


def core_command(args) -> int:
    emit(write_samples([core_view(_form(args), args.t, args.resolution)], args.format))
    return 0


def components_command(args) -> int:
    rows = []
    for t, cloud in read_clouds(read_text(args.input)):
        rows.append({"components": count_components(cloud, args.radius), "points": len(cloud), "t": t})
    emit(json.dumps(rows, sort_keys=True))
    return 0


def project_stereo_command(args) -> int:
    pole = parse_floats(args.pole, '--pole')
    clouds = [(t, stereographic_project(cloud, pole)) for t, cloud in read_clouds(read_text(args.input))]
    emit(clouds_to_csv(clouds))
    return 0


def project_inverse_command(args) -> int:
    pole = parse_floats(args.pole, '--pole')
    clouds = [(t, stereographic_inverse(cloud, pole)) for t, cloud in read_clouds(read_text(args.input))]
    emit(clouds_to_csv(clouds))
    return 0


def revolve_command(args) -> int:
    axes = parse_ints(args.axes, '--axes')
    clouds = [
        (t, revolve(cloud, axes, args.steps, args.twist, args.full_turn, args.twist_axis))
        for t, cloud in read_clouds(read_text(args.input))
    ]
    emit(clouds_to_csv(clouds))
    return 0


def register(subparsers, form_input, cloud_input):
    morse = subparsers.add_parser('morse', help='Morse forms of surgery and their level sets')
    commands = morse.add_subparsers(dest='action', required=True)

    for name, handler, help_text in (('eval', eval_command, 'Value of the form at a point'),
                                     ('grad', grad_command, 'Gradient at a point')):
        parser = commands.add_parser(name, parents=[form_input], help=help_text)
        parser.add_argument('--point', required=True, help='Comma-separated coordinates')
        parser.set_defaults(handler=handler)

    parser = commands.add_parser('index', parents=[form_input], help='Morse index from the Hessian')
    parser.set_defaults(handler=index_command)

    parser = commands.add_parser('check-gradient', parents=[form_input], help='Finite-difference gradient check')
    parser.add_argument('--points', type=int, default=100)
    parser.set_defaults(handler=check_gradient_command)

    def sampled(name, handler, help_text):
        parser = commands.add_parser(name, parents=[form_input], help=help_text)
        parser.add_argument('--resolution', type=int, default=32)
        parser.add_argument('--format', choices=['csv', 'obj', 'json'], default='csv')
        parser.set_defaults(handler=handler)
        return parser

    parser = sampled('levels', levels_command, 'Level sets at chosen t')
    parser.add_argument('--t-list', required=True, help='Comma-separated levels, e.g. --t-list=-0.5,0,0.5')

    parser = sampled('sequence', sequence_command, 'Level sets on an evenly spaced t grid')
    parser.add_argument('--t-from', type=float, required=True)
    parser.add_argument('--t-to', type=float, required=True)
    parser.add_argument('--t-steps', type=int, required=True)

    parser = sampled('core', core_command, 'Collapsing or emerging sphere at one t')
    parser.add_argument('--t', type=float, required=True)

    parser = commands.add_parser('components', parents=[cloud_input], help='Connected components per level')
    parser.add_argument('--radius', type=float, default=None, help='Link radius (twice the neighbour spacing when omitted)')
    parser.set_defaults(handler=components_command)

    parser = commands.add_parser('project-stereo', parents=[cloud_input], help='Stereographic projection S^m -> R^m')
    parser.add_argument('--pole', required=True)
    parser.set_defaults(handler=project_stereo_command)

    parser = commands.add_parser('project-inverse', parents=[cloud_input], help='Inverse stereographic projection R^m -> S^m')
    parser.add_argument('--pole', required=True)
    parser.set_defaults(handler=project_inverse_command)

    parser = commands.add_parser('revolve', parents=[cloud_input], help='Rotate the free coordinate into a new dimension')
    parser.add_argument('--axes', required=True, help='Comma-separated fixed axes')
    parser.add_argument('--steps', type=int, default=16)
    parser.add_argument('--twist', type=float, default=0.0, help='Extra rotation in radians along the twist axis')
    parser.add_argument('--twist-axis', type=int, default=None)
    parser.add_argument('--full-turn', action='store_true')
    parser.set_defaults(handler=revolve_command)
