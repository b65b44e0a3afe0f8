"""Evaluation, gradients and index of the local Morse forms."""

import logging
from typing import Sequence

import numpy as np

from surgery.config import Config
from surgery.errors import DimensionMismatch, OutsideDisc
from .models import MorseForm

logger = logging.getLogger(__name__)

DISC_SLACK = 1e-12


def _point(form: MorseForm, x: Sequence[float]) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.shape[0] != form.ambient_dim:
        raise DimensionMismatch(f"Expected a vector of length {form.ambient_dim}, got shape {x.shape}")
    if np.linalg.norm(x) > 1.0 + DISC_SLACK:
        raise OutsideDisc(f"|x| = {np.linalg.norm(x):.6g} lies outside the unit disc")
    return x


def evaluate(form: MorseForm, x: Sequence[float]) -> float:
    x = _point(form, x)
    return float(np.dot(form.signs, x * x))


def gradient(form: MorseForm, x: Sequence[float]) -> np.ndarray:
    x = _point(form, x)
    return 2.0 * form.signs * x


def evaluate_many(form: MorseForm, points: np.ndarray) -> np.ndarray:
    """Row-wise f for an (N, D) array, no disc check"""
    return (points * points) @ form.signs


def gradient_many(form: MorseForm, points: np.ndarray) -> np.ndarray:
    return 2.0 * points * form.signs


def hessian(form: MorseForm) -> np.ndarray:
    return np.diag(2.0 * form.signs)


def hessian_index(form: MorseForm) -> int:
    """Number of negative eigenvalues of the (constant) Hessian"""
    eigenvalues = np.linalg.eigvalsh(hessian(form))
    return int(np.sum(eigenvalues < 0))


def gradient_check(form: MorseForm, x: Sequence[float], h: float = 1e-5) -> float:
    """
    Max componentwise gap between the analytic gradient and a central
    finite difference with step h.
    """
    if not 0 < h < 1e-3:
        raise ValueError(f"Step h must lie in (0, 1e-3), got {h}")
    x = _point(form, x)
    if np.linalg.norm(x) + h > 1.0 + DISC_SLACK:
        raise OutsideDisc(f"x must be interior to the disc with margin {h}")

    steps = np.eye(form.ambient_dim) * h
    forward = evaluate_many(form, x + steps)
    backward = evaluate_many(form, x - steps)
    numeric = (forward - backward) / (2.0 * h)
    error = float(np.max(np.abs(numeric - gradient(form, x)))) if form.ambient_dim else 0.0

    if error > Config.GRADIENT_TOL:
        logger.warning(f"Gradient check error {error:.3g} exceeds {Config.GRADIENT_TOL} for {form} at {x}")
    return error
