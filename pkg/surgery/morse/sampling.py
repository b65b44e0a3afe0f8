"""Level-set samples of the Morse forms and their evolution across the critical value.

Index-1 forms in dimensions 2 and 3 use exact parametric generators (hyperbola
branches, hyperboloid sheets, the cone at t = 0). Everything else is sampled by
seeding uniformly in the disc and projecting onto the level set with Newton
steps along the gradient. Randomness is seeded per (seed, t).
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np

from surgery.config import Config
from surgery.errors import EmptyLevelSet, InvalidGrid
from .forms import evaluate_many, gradient_many
from .models import LevelSetSample, MorseForm, PointCloud

logger = logging.getLogger(__name__)

MIN_RESOLUTION = 8
SHRINK = 1.0 - 1e-12
MAX_STEP = 0.5
MAX_ROUNDS = 8


def _rng(seed: int, t: float) -> np.random.Generator:
    bits = int(np.float64(t).view(np.uint64))
    return np.random.default_rng(np.random.SeedSequence([seed, bits & 0xFFFFFFFF, bits >> 32]))


def _symmetric_grid(bound: float, resolution: int) -> np.ndarray:
    """Odd-length grid on [-bound, bound] containing 0"""
    return np.linspace(-bound, bound, 2 * (resolution // 2) + 1)


def _wrap_faces(rows: int, cols: int, offset: int) -> np.ndarray:
    """Quads of a (rows x cols) grid whose columns wrap around"""
    a, b = np.meshgrid(np.arange(rows - 1), np.arange(cols), indexing='ij')
    a, b = a.ravel(), b.ravel()
    b_next = (b + 1) % cols
    return offset + np.stack([a * cols + b, (a + 1) * cols + b, (a + 1) * cols + b_next, a * cols + b_next], axis=1)


def _hyperbola(t: float, resolution: int) -> Tuple[np.ndarray, None]:
    """-x^2 + y^2 = t in the unit disc"""
    if t < 0:
        y = _symmetric_grid(np.sqrt((1.0 + t) / 2.0) * SHRINK, resolution)
        x = np.sqrt(y * y - t)
        branches = [np.column_stack([-x, y]), np.column_stack([x, y])]
    elif t > 0:
        x = _symmetric_grid(np.sqrt((1.0 - t) / 2.0) * SHRINK, resolution)
        y = np.sqrt(x * x + t)
        branches = [np.column_stack([x, -y]), np.column_stack([x, y])]
    else:
        s = np.linspace(0.0, np.sqrt(0.5) * SHRINK, resolution // 2 + 1)[1:]
        rays = [np.column_stack([sx * s, sy * s]) for sx, sy in ((-1, -1), (-1, 1), (1, -1), (1, 1))]
        branches = [np.zeros((1, 2))] + rays
    return np.vstack(branches), None


def _hyperboloid(t: float, resolution: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    -x^2 + y^2 + z^2 = t in the unit ball, as (profile x angle) grids. The angle
    count keeps the rim spacing no wider than the largest profile step so the
    samples are close to isotropic.
    """
    sheets = []
    if t < 0:
        rho = np.linspace(0.0, np.sqrt((1.0 + t) / 2.0) * SHRINK, resolution)
        x = np.sqrt(rho * rho - t)
        sheets = [(-x, rho), (x, rho)]
    elif t > 0:
        x = _symmetric_grid(np.sqrt((1.0 - t) / 2.0) * SHRINK, resolution)
        sheets = [(x, np.sqrt(x * x + t))]
    else:
        x = _symmetric_grid(np.sqrt(0.5) * SHRINK, resolution)
        sheets = [(x, np.abs(x))]

    points, faces, offset = [], [], 0
    for axial, radius in sheets:
        profile_step = np.max(np.hypot(np.diff(axial), np.diff(radius)))
        cols = max(resolution, int(np.ceil(2.0 * np.pi * np.max(radius) / profile_step)))
        phi = np.linspace(0.0, 2.0 * np.pi, cols, endpoint=False)
        rows = len(axial)
        grid = np.empty((rows, cols, 3))
        grid[:, :, 0] = axial[:, None]
        grid[:, :, 1] = radius[:, None] * np.cos(phi)[None, :]
        grid[:, :, 2] = radius[:, None] * np.sin(phi)[None, :]
        points.append(grid.reshape(-1, 3))
        faces.append(_wrap_faces(rows, cols, offset))
        offset += rows * cols
    return np.vstack(points), np.vstack(faces)


def _project(form: MorseForm, t: float, seeds: np.ndarray) -> np.ndarray:
    """Newton steps along the gradient, capped in length; returns converged points inside the disc"""
    x = seeds.copy()
    tol = Config.LEVEL_TOL
    for _ in range(Config.NEWTON_MAX_ITER):
        residual = evaluate_many(form, x) - t
        grad = gradient_many(form, x)
        norm2 = np.sum(grad * grad, axis=1)
        active = (np.abs(residual) > tol * 1e-3) & (norm2 > 1e-300)
        if not np.any(active):
            break
        step = (residual[active] / norm2[active])[:, None] * grad[active]
        length = np.linalg.norm(step, axis=1)
        scale = np.minimum(1.0, MAX_STEP / np.maximum(length, 1e-300))
        x[active] -= step * scale[:, None]

    converged = np.abs(evaluate_many(form, x) - t) <= tol
    inside = np.linalg.norm(x, axis=1) <= 1.0
    return x[converged & inside]


def _random_sample(form: MorseForm, t: float, resolution: int, seed: int) -> np.ndarray:
    dim = form.ambient_dim
    target = max(2, min(resolution ** (dim - 1), Config.MAX_POINTS))
    rng = _rng(seed, t)
    batch = (target + 1) // 2

    collected, total, tried = [], 0, 0
    for _ in range(MAX_ROUNDS):
        directions = rng.standard_normal((batch, dim))
        directions /= np.maximum(np.linalg.norm(directions, axis=1), 1e-300)[:, None]
        seeds = directions * (rng.random(batch) ** (1.0 / dim))[:, None]
        accepted = _project(form, t, seeds)
        tried += batch
        # the quadric is symmetric under x -> -x; keep each point next to its mirror
        collected.append(np.stack([accepted, -accepted], axis=1).reshape(-1, dim))
        total += 2 * len(accepted)
        if total >= target:
            break

    points = np.vstack(collected)[:target]
    logger.debug(f"{form} t={t}: {len(points)} points from {tried} seeds")
    if t == 0.0:
        points = np.vstack([np.zeros((1, dim)), points])
    return points


def _validate(t: float, resolution: int):
    if not -1.0 < t < 1.0:
        raise InvalidGrid(f"t must lie in (-1, 1), got {t}")
    if resolution < MIN_RESOLUTION:
        raise InvalidGrid(f"resolution must be >= {MIN_RESOLUTION}, got {resolution}")


def sample_level_set(form: MorseForm, t: float, resolution: int = 32, seed: Optional[int] = None) -> LevelSetSample:
    """
    Sample f^-1(t) inside the closed unit disc.

    Args:
        form: The Morse form
        t: Level in (-1, 1)
        resolution: Points per parameter direction (>= 8)
        seed: RNG seed for the projection sampler (Config.SEED when None)

    Returns:
        LevelSetSample whose points satisfy |f(x) - t| <= Config.LEVEL_TOL
    """
    _validate(t, resolution)
    seed = Config.SEED if seed is None else seed
    t = float(t)

    # a reversed form at t is the plain form at -t
    base = MorseForm(ambient_dim=form.ambient_dim, index=form.index)
    level = -t if form.time_reversed else t

    faces = None
    if base.index == 1 and base.ambient_dim == 2:
        points, faces = _hyperbola(level, resolution)
    elif base.index == 1 and base.ambient_dim == 3:
        points, faces = _hyperboloid(level, resolution)
    else:
        points = _random_sample(base, level, resolution, seed)

    if len(points) == 0:
        raise EmptyLevelSet(f"No point of {form} at t={t} lies in the unit disc")

    residual = np.max(np.abs(evaluate_many(form, points) - t))
    if residual > Config.LEVEL_TOL:
        logger.warning(f"Level residual {residual:.3g} above {Config.LEVEL_TOL} for {form} at t={t}")

    return LevelSetSample(
        form=form,
        t=t,
        cloud=PointCloud(dim=form.ambient_dim, points=points),
        residual_tol=Config.LEVEL_TOL,
        faces=faces,
    )


def surgery_sequence(form: MorseForm, t_grid: Sequence[float], resolution: int = 32,
                     seed: Optional[int] = None) -> List[LevelSetSample]:
    """One sample per t of a strictly increasing grid; output order is the grid order"""
    t_grid = [float(t) for t in t_grid]
    if any(b <= a for a, b in zip(t_grid, t_grid[1:])):
        raise InvalidGrid(f"t grid must be strictly increasing, got {t_grid}")
    for t in t_grid:
        _validate(t, resolution)

    if Config.SAMPLE_WORKERS > 1 and len(t_grid) > 1:
        with ThreadPoolExecutor(max_workers=Config.SAMPLE_WORKERS) as executor:
            return list(executor.map(lambda t: sample_level_set(form, t, resolution, seed), t_grid))
    return [sample_level_set(form, t, resolution, seed) for t in t_grid]


def t_range(start: float, stop: float, steps: int) -> List[float]:
    if steps < 1:
        raise InvalidGrid(f"t steps must be >= 1, got {steps}")
    if steps == 1:
        return [float(start)]
    return [float(t) for t in np.linspace(start, stop, steps)]


def _sphere(dim: int, radius: float, resolution: int, rng: np.random.Generator) -> np.ndarray:
    if dim == 1:
        return np.array([[-radius], [radius]])
    if dim == 2:
        angle = np.linspace(0.0, 2.0 * np.pi, resolution, endpoint=False)
        return radius * np.column_stack([np.cos(angle), np.sin(angle)])
    count = min(resolution ** (dim - 1), Config.MAX_POINTS)
    directions = rng.standard_normal((count, dim))
    return radius * directions / np.linalg.norm(directions, axis=1)[:, None]


def core_view(form: MorseForm, t: float, resolution: int = 32, seed: Optional[int] = None) -> LevelSetSample:
    """
    The level set restricted to one eigenspace: for t < 0 the sphere of radius
    sqrt(-t) in the negative subspace that collapses, at t = 0 the critical
    point, for t > 0 the sphere of radius sqrt(t) in the positive subspace that
    emerges.
    """
    _validate(t, resolution)
    seed = Config.SEED if seed is None else seed
    signs = form.signs
    dim = form.ambient_dim

    if t == 0.0:
        points = np.zeros((1, dim))
    else:
        axes = np.flatnonzero(signs < 0) if t < 0 else np.flatnonzero(signs > 0)
        if len(axes) == 0:
            raise EmptyLevelSet(f"{form} has no {'negative' if t < 0 else 'positive'} directions, empty at t={t}")
        sphere = _sphere(len(axes), np.sqrt(abs(t)), resolution, _rng(seed, t))
        points = np.zeros((len(sphere), dim))
        points[:, axes] = sphere

    return LevelSetSample(
        form=form,
        t=float(t),
        cloud=PointCloud(dim=dim, points=points),
        residual_tol=Config.LEVEL_TOL,
    )
