import itertools
import logging

from surgery.errors import NegativeParameter
from surgery.groups.models import Presentation, Word
from surgery.groups.presentations import commutator, free_product, presentation
from .wirtinger import arc_names

logger = logging.getLogger(__name__)


def trivial_group() -> Presentation:
    return presentation([])


def free_group(rank: int) -> Presentation:
    if rank < 0:
        raise NegativeParameter(f"Rank must be >= 0, got {rank}")
    return presentation(arc_names(rank))


def cyclic_group(order: int) -> Presentation:
    """(a | a^order); order 0 gives Z"""
    if order < 0:
        raise NegativeParameter(f"Order must be >= 0, got {order}")
    relators = [Word.power_of(0, order)] if order else []
    return presentation(['a'], relators)


def lens_space_group(p: int) -> Presentation:
    """Fundamental group of L(p, 1), the surgery on the unknot with framing p"""
    if p < 0:
        raise NegativeParameter(f"Lens space parameter must be >= 0, got {p}; pass |p|")
    return cyclic_group(p)


def torus_group(n: int) -> Presentation:
    """Z^n: n generators with all pairwise commutators"""
    if n < 0:
        raise NegativeParameter(f"Dimension must be >= 0, got {n}")
    relators = [commutator(Word.power_of(i), Word.power_of(j)) for i, j in itertools.combinations(range(n), 2)]
    return presentation(arc_names(n), relators)


def polyhedral_group(l: int, m: int, n: int) -> Presentation:
    """
    Binary polyhedral group <l,m,n>: a^l = b^m = c^n = abc.

    <3,3,2> is the binary tetrahedral group (order 24), <5,3,2> the binary
    icosahedral group (order 120).
    """
    if min(l, m, n) < 1:
        raise NegativeParameter(f"Polyhedral parameters must be >= 1, got ({l}, {m}, {n})")
    a_l = Word.power_of(0, l)
    abc = Word.from_letters([(0, 1), (1, 1), (2, 1)])
    relators = [
        a_l * Word.power_of(1, -m),
        a_l * Word.power_of(2, -n),
        a_l * abc.inverse(),
    ]
    return presentation(['a', 'b', 'c'], relators)


def connected_sum(p1: Presentation, p2: Presentation) -> Presentation:
    """pi_1(M # M') for closed manifolds of dimension >= 3"""
    return free_product(p1, p2)


def connected_sum_group(p: Presentation) -> Presentation:
    """Effect of a 0-surgery (dimension >= 3) on pi_1: the free product with Z"""
    return free_product(p, presentation(['z']))
