"""Group identification: coset enumeration, homomorphism counts, distinguishing battery."""

from .coset_table import group_order, todd_coxeter
from .homs import count_homs, count_surjections, distinguish, iter_homs, symmetric_group
from .models import CosetTable, EnumerationResult, Verdict, Witness

__all__ = [
    'CosetTable',
    'EnumerationResult',
    'Verdict',
    'Witness',
    'count_homs',
    'count_surjections',
    'distinguish',
    'group_order',
    'iter_homs',
    'symmetric_group',
    'todd_coxeter',
]
