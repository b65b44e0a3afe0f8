"""Knot groups, framed longitudes, surgery groups and standard group constructors."""

from .constructors import (
    connected_sum,
    connected_sum_group,
    cyclic_group,
    free_group,
    lens_space_group,
    polyhedral_group,
    torus_group,
    trivial_group,
)
from .models import LongitudeWord, SurgerySpec
from .wirtinger import arc_names, blackboard_longitude, framed_longitude, surgery_group, wirtinger

__all__ = [
    'LongitudeWord',
    'SurgerySpec',
    'arc_names',
    'blackboard_longitude',
    'connected_sum',
    'connected_sum_group',
    'cyclic_group',
    'framed_longitude',
    'free_group',
    'lens_space_group',
    'polyhedral_group',
    'surgery_group',
    'torus_group',
    'trivial_group',
    'wirtinger',
]
