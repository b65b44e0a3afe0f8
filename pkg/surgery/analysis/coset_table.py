"""Todd-Coxeter coset enumeration over the trivial subgroup.

The enumeration is sympy's HLT strategy (`coset_enumeration_r`); this module
translates presentations into sympy's free groups and turns a blown coset
bound into an Inconclusive result.
"""

import logging
from typing import List, Optional

from sympy.combinatorics.fp_groups import FpGroup, coset_enumeration_r
from sympy.combinatorics.free_groups import free_group

from surgery.config import Config
from surgery.groups.models import Presentation
from surgery.groups.presentations import tietze_eliminate
from .models import CosetTable, EnumerationResult

logger = logging.getLogger(__name__)


def to_fp_group(p: Presentation) -> FpGroup:
    """The presentation as a sympy FpGroup; generator i becomes the symbol g<i>"""
    free, *generators = free_group(" ".join(f"g{i}" for i in range(p.generator_count)))
    relators: List = []
    for relator in p.relators:
        if relator.is_empty:
            continue
        word = free.identity
        for g, exponent in relator.syllables:
            word = word * generators[g] ** exponent
        relators.append(word)
    return FpGroup(free, relators)


def todd_coxeter(p: Presentation, max_cosets: Optional[int] = None) -> EnumerationResult:
    """
    Enumerate the cosets of the trivial subgroup.

    Args:
        p: Presentation
        max_cosets: Bound on cosets defined (Config.MAX_COSETS when None)

    Returns:
        Finite(order) when the table closes within the bound, otherwise
        Inconclusive; Inconclusive does not mean the group is infinite
    """
    max_cosets = Config.MAX_COSETS if max_cosets is None else max_cosets
    if max_cosets < 1:
        raise ValueError(f"max_cosets must be >= 1, got {max_cosets}")

    if p.generator_count == 0:
        return EnumerationResult.finite(1, 1, CosetTable(generators=(), rows=((),)))

    try:
        table = coset_enumeration_r(to_fp_group(p), [], max_cosets=max_cosets)
    except ValueError as e:
        logger.warning(f"Coset enumeration inconclusive: {e}")
        return EnumerationResult.inconclusive(max_cosets)

    used = len(table.table)
    table.compress()
    table.standardize()
    rows = tuple(tuple(int(entry) for entry in row) for row in table.table)
    result = CosetTable(generators=p.generators, rows=rows)
    logger.info(f"Coset enumeration closed: order {result.order}, {used} cosets defined")
    return EnumerationResult.finite(result.order, used, result)


def group_order(p: Presentation, max_cosets: Optional[int] = None) -> EnumerationResult:
    """Tietze elimination followed by coset enumeration"""
    return todd_coxeter(tietze_eliminate(p), max_cosets)
