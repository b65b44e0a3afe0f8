"""Stereographic projection S^m -> R^m and revolution of point clouds into one more dimension."""

import logging
from typing import Optional, Sequence

import numpy as np

from surgery.config import Config
from surgery.errors import BadAxisSet, DimensionMismatch, InvalidGrid, NotOnSphere, PointAtPole
from .models import PointCloud

logger = logging.getLogger(__name__)

MIN_STEPS = 3


def _unit_pole(pole: Sequence[float], dim: int) -> np.ndarray:
    pole = np.asarray(pole, dtype=float)
    if pole.shape != (dim,):
        raise DimensionMismatch(f"Pole must have length {dim}, got shape {pole.shape}")
    if abs(np.linalg.norm(pole) - 1.0) > Config.SPHERE_TOL:
        raise NotOnSphere(f"Pole {pole.tolist()} is not a unit vector")
    return pole


def _equator_basis(pole: np.ndarray) -> np.ndarray:
    """
    (m, m+1) matrix with orthonormal rows spanning the hyperplane orthogonal to
    the pole. An axis pole drops its coordinate; any other pole uses the
    Householder reflection taking it to the last axis.
    """
    dim = len(pole)
    nonzero = np.flatnonzero(np.abs(pole) > 0)
    if len(nonzero) == 1:
        return np.delete(np.eye(dim), nonzero[0], axis=0)
    v = pole.copy()
    v[-1] -= 1.0
    householder = np.eye(dim) - 2.0 * np.outer(v, v) / np.dot(v, v)
    return householder[:-1]


def stereographic_project(cloud: PointCloud, pole: Sequence[float]) -> PointCloud:
    """
    Project points of the unit sphere S^m from `pole` onto the equatorial
    hyperplane, identified with R^m.
    """
    pole = _unit_pole(pole, cloud.dim)
    x = cloud.points
    if len(x) == 0:
        return PointCloud(dim=cloud.dim - 1, points=np.zeros((0, cloud.dim - 1)))

    off_sphere = np.abs(np.linalg.norm(x, axis=1) - 1.0) > Config.SPHERE_TOL
    if np.any(off_sphere):
        raise NotOnSphere(f"{int(np.sum(off_sphere))} point(s) are not on the unit sphere, first {x[off_sphere][0].tolist()}")
    at_pole = np.linalg.norm(x - pole, axis=1) <= Config.POLE_TOL
    if np.any(at_pole):
        raise PointAtPole(f"{int(np.sum(at_pole))} point(s) within {Config.POLE_TOL} of the pole")

    s = x @ pole
    y = ((x - np.outer(s, pole)) / (1.0 - s)[:, None]) @ _equator_basis(pole).T
    return PointCloud(dim=cloud.dim - 1, points=y)


def stereographic_inverse(cloud: PointCloud, pole: Sequence[float]) -> PointCloud:
    """Inverse of stereographic_project: R^m back onto S^m"""
    pole = _unit_pole(pole, cloud.dim + 1)
    y = cloud.points
    r2 = np.sum(y * y, axis=1)
    x = (2.0 * (y @ _equator_basis(pole)) + np.outer(r2 - 1.0, pole)) / (r2 + 1.0)[:, None]
    return PointCloud(dim=cloud.dim + 1, points=x)


def revolve(cloud: PointCloud, fixed_axes: Sequence[int], steps: int, twist: float = 0.0,
            full_turn: bool = False, twist_axis: Optional[int] = None) -> PointCloud:
    """
    Rotate the one free coordinate into a new last dimension.

    Args:
        cloud: Points in dimension k
        fixed_axes: The k-1 coordinates spanning the rotation axis
        steps: Rotated copies per point (>= 3)
        twist: Extra angle, linear in the twist-axis coordinate from 0 at its
            minimum to `twist` at its maximum
        full_turn: Angles over [0, 2pi) instead of the half turn [0, pi)
        twist_axis: Coordinate driving the twist (first fixed axis when None)

    Returns:
        PointCloud in dimension k+1, `steps` consecutive copies per input point
    """
    dim = cloud.dim
    axes = sorted(set(int(a) for a in fixed_axes))
    if len(axes) != len(list(fixed_axes)) or any(not 0 <= a < dim for a in axes):
        raise BadAxisSet(f"Invalid fixed axes {list(fixed_axes)} for dimension {dim}")
    free = [a for a in range(dim) if a not in axes]
    if len(free) != 1:
        raise BadAxisSet(f"Fixed axes must leave exactly one coordinate free, {len(free)} left: {free}")
    if steps < MIN_STEPS:
        raise InvalidGrid(f"steps must be >= {MIN_STEPS}, got {steps}")
    j = free[0]

    x = cloud.points
    sweep = (2.0 if full_turn else 1.0) * np.pi
    theta = sweep * np.arange(steps) / steps

    offset = np.zeros(len(x))
    if twist and len(x):
        axis = axes[0] if twist_axis is None else twist_axis
        if not 0 <= axis < dim or axis == j:
            raise BadAxisSet(f"Twist axis {axis} must be one of the fixed axes {axes}")
        a = x[:, axis]
        span = np.max(a) - np.min(a)
        if span > 0:
            offset = twist * (a - np.min(a)) / span

    angle = offset[:, None] + theta[None, :]
    out = np.empty((len(x), steps, dim + 1))
    out[:, :, :dim] = x[:, None, :]
    out[:, :, j] = x[:, j, None] * np.cos(angle)
    out[:, :, dim] = x[:, j, None] * np.sin(angle)
    logger.debug(f"Revolved {len(x)} points about axes {axes} in {steps} steps, twist={twist}")
    return PointCloud(dim=dim + 1, points=out.reshape(-1, dim + 1))
