"""Connected components of the epsilon-neighbourhood graph of a point cloud."""

import logging
from typing import Optional

import numpy as np
from scipy.spatial import cKDTree

from surgery.errors import InvalidRadius
from .models import PointCloud

logger = logging.getLogger(__name__)


class DSU:
    """Union-find over 0..n-1, merged in bulk by hooking roots onto the smaller root"""

    def __init__(self, size: int):
        self.parent = np.arange(size)

    def compress(self):
        while True:
            grand = self.parent[self.parent]
            if np.array_equal(grand, self.parent):
                return
            self.parent = grand

    def find(self, items: np.ndarray) -> np.ndarray:
        self.compress()
        return self.parent[items]

    def union_pairs(self, pairs: np.ndarray):
        if len(pairs) == 0:
            return
        left, right = pairs[:, 0], pairs[:, 1]
        while True:
            a, b = self.find(left), self.find(right)
            differ = a != b
            if not np.any(differ):
                return
            a, b = a[differ], b[differ]
            low, high = np.minimum(a, b), np.maximum(a, b)
            np.minimum.at(self.parent, high, low)

    def roots(self) -> np.ndarray:
        self.compress()
        return self.parent

    def count(self) -> int:
        return int(len(np.unique(self.roots())))


def nearest_neighbor_spacing(cloud: PointCloud) -> float:
    """Largest distance from a point to its nearest neighbour (0 for fewer than two points)"""
    if len(cloud) < 2:
        return 0.0
    distances, _ = cKDTree(cloud.points).query(cloud.points, k=2)
    return float(np.max(distances[:, 1]))


def count_components(cloud: PointCloud, link_radius: Optional[float] = None) -> int:
    """
    Components of the graph joining points at distance <= link_radius.

    Args:
        cloud: Points
        link_radius: Edge length bound; twice the nearest-neighbour spacing when None

    Returns:
        Number of connected components (0 for an empty cloud)
    """
    n = len(cloud)
    if n == 0:
        return 0
    if link_radius is None:
        spacing = nearest_neighbor_spacing(cloud)
        if spacing == 0.0:
            # every point coincides with another; only exact duplicates are linked
            link_radius = np.finfo(float).tiny
        else:
            link_radius = 2.0 * spacing
    elif link_radius <= 0:
        raise InvalidRadius(f"link_radius must be > 0, got {link_radius}")

    tree = cKDTree(cloud.points)
    pairs = tree.query_pairs(r=link_radius, output_type='ndarray')
    dsu = DSU(n)
    dsu.union_pairs(pairs)
    components = dsu.count()
    logger.debug(f"{n} points, {len(pairs)} links at radius {link_radius:.4g}: {components} components")
    return components
