"""Smith normal form over the integers and abelianization of presentations.

The reduction itself is sympy's (`invariant_factors` over ZZ); this module only
brings its factors into a positive divisibility chain.
"""

import logging
from typing import List, Sequence, Tuple

from sympy import ZZ, Matrix, igcd, ilcm
from sympy.matrices.normalforms import invariant_factors

from .models import AbelianInvariants, IntegerMatrix, Presentation

logger = logging.getLogger(__name__)


def _divisibility_chain(diagonal: Sequence[int]) -> List[int]:
    """Replace pairs by (gcd, lcm) until each factor divides the next"""
    factors = sorted(abs(int(d)) for d in diagonal if d)
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            a, b = factors[i], factors[j]
            factors[i], factors[j] = int(igcd(a, b)), int(ilcm(a, b))
    return factors


def smith_normal_form(matrix: IntegerMatrix) -> Tuple[List[int], int]:
    """
    Invariant factors of an integer matrix.

    Args:
        matrix: Rectangular list of integer rows (not modified)

    Returns:
        (positive invariant factors d1 | d2 | ..., rank)
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    if any(len(row) != n for row in matrix):
        raise ValueError("Matrix is not rectangular")
    if m == 0 or n == 0:
        return [], 0

    factors = _divisibility_chain(invariant_factors(Matrix(matrix), domain=ZZ))
    logger.debug(f"SNF of {m}x{n} matrix: factors={factors}")
    return factors, len(factors)


def exponent_matrix(p: Presentation) -> IntegerMatrix:
    """One row per relator, one column per generator: exponent sums"""
    return [[relator.exponent_sum(g) for g in range(p.generator_count)] for relator in p.relators]


def abelianize(p: Presentation) -> AbelianInvariants:
    factors, rank = smith_normal_form(exponent_matrix(p))
    return AbelianInvariants(free_rank=p.generator_count - rank, torsion=tuple(d for d in factors if d > 1))


def direct_sum(left: AbelianInvariants, right: AbelianInvariants) -> AbelianInvariants:
    """Sum of two abelian groups, torsion brought back to divisibility form"""
    cyclic = list(left.torsion) + list(right.torsion)
    diagonal = [[d if i == j else 0 for j in range(len(cyclic))] for i, d in enumerate(cyclic)]
    factors, _ = smith_normal_form(diagonal)
    return AbelianInvariants(
        free_rank=left.free_rank + right.free_rank,
        torsion=tuple(d for d in factors if d > 1),
    )


def is_divisibility_chain(factors: Sequence[int]) -> bool:
    return all(b % a == 0 for a, b in zip(factors, factors[1:]))


def torsion_order(invariants: AbelianInvariants) -> int:
    order = 1
    for d in invariants.torsion:
        order *= d
    return order
