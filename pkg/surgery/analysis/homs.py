"""Homomorphisms into small symmetric groups and the distinguishing battery.

Permutations of {0..n-1} are indexed in lexicographic order (index 0 is the
identity); products come from a multiplication table built once per degree
from sympy permutations.
"""

import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import SymmetricGroup as NamedSymmetricGroup

from surgery.config import Config
from surgery.errors import SearchTooLarge
from surgery.groups.models import Presentation
from surgery.groups.presentations import tietze_eliminate
from surgery.groups.snf import abelianize
from .coset_table import todd_coxeter
from .models import Verdict, Witness

logger = logging.getLogger(__name__)

MAX_DEGREE = 6
BATTERY_DEGREES = (2, 3, 4)


class SymmetricGroup:
    """S_n as index tables: mult[i][j] applies permutation i first, then j"""

    def __init__(self, n: int):
        self.n = n
        self.elements: List[Tuple[int, ...]] = list(itertools.permutations(range(n)))
        self.order = len(self.elements)
        self._index = {perm: i for i, perm in enumerate(self.elements)}
        # S_0 acts on nothing; let it act on a single point instead
        self.permutations = [Permutation(list(perm) or [0]) for perm in self.elements]
        self.group = NamedSymmetricGroup(max(n, 1))
        self.mult = [[self.index_of(p * q) for q in self.permutations] for p in self.permutations]
        self.inverse = [self.index_of(~p) for p in self.permutations]

    def index_of(self, perm: Permutation) -> int:
        return self._index[tuple(perm.array_form[:self.n])]

    def conjugacy_classes(self) -> List[Tuple[int, int]]:
        """(representative index, class size) per conjugacy class, identity class first"""
        classes = [sorted(self.index_of(perm) for perm in members) for members in self.group.conjugacy_classes()]
        return sorted((members[0], len(members)) for members in classes)

    def generated_order(self, images: Sequence[int]) -> int:
        generators = [self.permutations[i] for i in images] or [self.permutations[0]]
        return int(PermutationGroup(generators).order())


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> SymmetricGroup:
    return SymmetricGroup(n)


def _check(p: Presentation, n: int) -> SymmetricGroup:
    if not 0 <= n <= MAX_DEGREE:
        raise SearchTooLarge(f"Symmetric degree must lie in 0..{MAX_DEGREE}, got {n}")
    size = math.factorial(n) ** p.generator_count
    if size > Config.HOM_BUDGET:
        raise SearchTooLarge(
            f"{math.factorial(n)}^{p.generator_count} = {size} assignments exceed the budget of "
            f"{Config.HOM_BUDGET}; run tietze_eliminate first"
        )
    return symmetric_group(n)


class _Search:
    """Depth-first assignment of generator images; a relator is checked once all its generators are set"""

    def __init__(self, p: Presentation, n: int):
        self.group = symmetric_group(n)
        self.k = p.generator_count
        self.checks: List[List[List[Tuple[int, int]]]] = [[] for _ in range(max(self.k, 1))]
        for relator in p.relators:
            letters = list(relator.letters)
            if not letters:
                continue
            self.checks[max(g for g, _ in letters)].append(letters)

    def satisfied(self, depth: int, images: List[int]) -> bool:
        mult, inverse = self.group.mult, self.group.inverse
        for letters in self.checks[depth]:
            x = 0
            for g, sign in letters:
                x = mult[x][images[g] if sign > 0 else inverse[images[g]]]
            if x != 0:
                return False
        return True

    def walk(self, images: List[int]) -> Iterator[Tuple[int, ...]]:
        depth = len(images)
        if depth == self.k:
            yield tuple(images)
            return
        for candidate in range(self.group.order):
            images.append(candidate)
            if self.satisfied(depth, images):
                yield from self.walk(images)
            images.pop()

    def branch(self, first: int) -> Iterator[Tuple[int, ...]]:
        if self.k == 0:
            yield ()
            return
        images = [first]
        if self.satisfied(0, images):
            yield from self.walk(images)


def iter_homs(p: Presentation, n: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Every homomorphism into S_n, as a tuple of generator images (permutation tuples)"""
    _check(p, n)
    search = _Search(p, n)
    elements = search.group.elements
    firsts = range(search.group.order) if search.k else [0]
    for first in firsts:
        for images in search.branch(first):
            yield tuple(elements[i] for i in images)


def _count_branch(args) -> Tuple[int, int]:
    """(homs, surjections) with the first generator fixed to a class representative"""
    p, n, first, surjective = args
    search = _Search(p, n)
    homs = surjections = 0
    for images in search.branch(first):
        homs += 1
        if surjective and search.group.generated_order(images) == search.group.order:
            surjections += 1
    return homs, surjections


def _count(p: Presentation, n: int, surjective: bool) -> Tuple[int, int]:
    group = _check(p, n)
    if p.generator_count == 0:
        return 1, int(group.order == 1)

    # conjugating a homomorphism preserves it, so the first image only needs
    # one representative per conjugacy class, weighted by the class size
    classes = group.conjugacy_classes()
    jobs = [(p, n, representative, surjective) for representative, _ in classes]

    if Config.HOM_WORKERS > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=Config.HOM_WORKERS) as executor:
            results = list(executor.map(_count_branch, jobs))
    else:
        results = [_count_branch(job) for job in jobs]

    homs = sum(size * h for (_, size), (h, _) in zip(classes, results))
    surjections = sum(size * s for (_, size), (_, s) in zip(classes, results))
    logger.debug(f"S_{n}: {homs} homs, {surjections} surjections over {p.generator_count} generators")
    return homs, surjections


def count_homs(p: Presentation, n: int) -> int:
    """Number of homomorphisms from the presented group into S_n"""
    return _count(p, n, surjective=False)[0]


def count_surjections(p: Presentation, n: int) -> int:
    """Homomorphisms whose images generate all of S_n"""
    return _count(p, n, surjective=True)[1]


def distinguish(p1: Presentation, p2: Presentation, max_cosets: Optional[int] = None) -> Verdict:
    """
    Compare abelianizations, then hom counts into S_2, S_3, S_4, then orders
    when both groups are finite. Indistinguishable is not a proof of isomorphism.
    Hom counts over the search budget are listed in `skipped`, and the verdict
    is then Inconclusive unless a later invariant tells the groups apart.
    """
    a1, a2 = abelianize(p1), abelianize(p2)
    if a1 != a2:
        return Verdict(different=True, witness=Witness(invariant="abelianization", left=str(a1), right=str(a2)))

    s1, s2 = tietze_eliminate(p1), tietze_eliminate(p2)
    skipped = []
    for n in BATTERY_DEGREES:
        try:
            c1, c2 = count_homs(s1, n), count_homs(s2, n)
        except SearchTooLarge as e:
            logger.warning(f"Homs to S_{n} not compared: {e}")
            skipped.append(f"homs_to_S{n}")
            continue
        if c1 != c2:
            return Verdict(different=True, witness=Witness(invariant=f"homs_to_S{n}", left=str(c1), right=str(c2)))

    # a positive free rank already means an infinite group
    if a1.free_rank == 0:
        o1, o2 = todd_coxeter(s1, max_cosets), todd_coxeter(s2, max_cosets)
        if o1.is_finite and o2.is_finite and o1.order != o2.order:
            return Verdict(different=True, witness=Witness(invariant="order", left=str(o1.order), right=str(o2.order)))

    return Verdict(different=False, skipped=tuple(skipped))
