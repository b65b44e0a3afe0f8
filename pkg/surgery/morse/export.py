"""CSV, OBJ and JSON writers (and readers) for level-set samples and point clouds.

Floats are written with `repr` precision so output is byte-stable and exact on
reload.
"""

import csv
import io
import json
import logging
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from surgery.errors import DimensionMismatch, InvalidGrid
from .models import LevelSetSample, MorseForm, PointCloud

logger = logging.getLogger(__name__)

OBJ_MAX_DIM = 4


def _fmt(value: float) -> str:
    return repr(float(value))


def _header(dim: int, with_t: bool) -> List[str]:
    return (['t'] if with_t else []) + [f"x{i}" for i in range(dim)]


def export_csv(samples: Sequence[LevelSetSample]) -> str:
    """One point per row with its t; rows ordered by sample, then point"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    dim = samples[0].form.ambient_dim if samples else 0
    writer.writerow(_header(dim, with_t=True))
    for sample in samples:
        for point in sample.points:
            writer.writerow([_fmt(sample.t)] + [_fmt(v) for v in point])
    return buffer.getvalue()


def clouds_to_csv(clouds: Sequence[Tuple[Optional[float], PointCloud]]) -> str:
    """The CSV layout load_csv reads; the t column is written when any cloud carries a t"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    dims = {cloud.dim for _, cloud in clouds}
    if len(dims) > 1:
        raise DimensionMismatch(f"Clouds of differing dimensions {sorted(dims)}")
    with_t = any(t is not None for t, _ in clouds)
    writer.writerow(_header(dims.pop() if dims else 0, with_t=with_t))
    for t, cloud in clouds:
        for point in cloud.points:
            prefix = [_fmt(0.0 if t is None else t)] if with_t else []
            writer.writerow(prefix + [_fmt(v) for v in point])
    return buffer.getvalue()


def load_csv(text: str) -> List[Tuple[Optional[float], PointCloud]]:
    """
    Read a CSV point table (optional header, optional leading t column) and
    group consecutive rows by t.
    """
    rows = [row for row in csv.reader(io.StringIO(text.strip())) if row]
    if not rows:
        return []
    with_t = False
    if not _numeric(rows[0]):
        with_t = rows[0][0].strip() == 't'
        rows = rows[1:]

    groups: List[Tuple[Optional[float], List[List[float]]]] = []
    for row in rows:
        try:
            values = [float(v) for v in row]
        except ValueError:
            raise InvalidGrid(f"Non-numeric CSV row: {row}")
        t = values[0] if with_t else None
        point = values[1:] if with_t else values
        if not groups or groups[-1][0] != t:
            groups.append((t, []))
        groups[-1][1].append(point)

    clouds = []
    for t, points in groups:
        dims = {len(p) for p in points}
        if len(dims) != 1:
            raise DimensionMismatch(f"Rows of differing lengths {sorted(dims)}")
        clouds.append((t, PointCloud(dim=dims.pop(), points=np.array(points))))
    return clouds


def _numeric(row: Sequence[str]) -> bool:
    try:
        [float(v) for v in row]
        return True
    except ValueError:
        return False


def export_obj(samples: Sequence[LevelSetSample]) -> str:
    """
    Points as vertices, one object per t; grid faces when the sampler
    produced them. Two-dimensional points are padded with z = 0.
    """
    lines = []
    base = 1
    for sample in samples:
        dim = sample.form.ambient_dim
        if dim > OBJ_MAX_DIM:
            raise DimensionMismatch(f"OBJ holds at most {OBJ_MAX_DIM} coordinates, got {dim}; project first")
        lines.append(f"o level_{_fmt(sample.t)}")
        for point in sample.points:
            coords = list(point) + [0.0] * max(0, 3 - dim)
            lines.append("v " + " ".join(_fmt(v) for v in coords))
        if sample.faces is not None:
            for face in sample.faces:
                lines.append("f " + " ".join(str(base + int(i)) for i in face))
        base += len(sample.points)
    return "\n".join(lines) + ("\n" if lines else "")


def _sample_payload(sample: LevelSetSample) -> dict:
    return {
        "faces": None if sample.faces is None else sample.faces.astype(int).tolist(),
        "form": sample.form.model_dump(),
        "points": sample.points.tolist(),
        "residual_tol": sample.residual_tol,
        "t": sample.t,
    }


def export_json(samples: Sequence[LevelSetSample]) -> str:
    return json.dumps([_sample_payload(s) for s in samples], sort_keys=True)


def load_json_sample(text: str) -> List[LevelSetSample]:
    """Read the output of export_json back into samples"""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidGrid(f"Invalid sample JSON: {e}")
    if isinstance(payload, dict):
        payload = [payload]

    samples = []
    for entry in payload:
        form = MorseForm(**entry["form"])
        faces = entry.get("faces")
        samples.append(LevelSetSample(
            form=form,
            t=entry["t"],
            cloud=PointCloud(dim=form.ambient_dim, points=entry["points"]),
            residual_tol=entry["residual_tol"],
            faces=None if faces is None else np.asarray(faces, dtype=int),
        ))
    return samples


def write_samples(samples: Iterable[LevelSetSample], fmt: str) -> str:
    samples = list(samples)
    if fmt == 'csv':
        return export_csv(samples)
    if fmt == 'obj':
        return export_obj(samples)
    if fmt == 'json':
        return export_json(samples)
    raise InvalidGrid(f"Unknown export format '{fmt}'")
