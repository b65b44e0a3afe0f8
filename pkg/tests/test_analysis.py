import itertools
import json

import pytest

from surgery.analysis import (
    EnumerationResult,
    count_homs,
    count_surjections,
    distinguish,
    group_order,
    iter_homs,
    symmetric_group,
    todd_coxeter,
)
from surgery.config import Config
from surgery.errors import SearchTooLarge
from surgery.framing import (
    SurgerySpec,
    free_group,
    lens_space_group,
    polyhedral_group,
    surgery_group,
    trivial_group,
    wirtinger,
)
from surgery.groups import abelianize, parse_presentation, tietze_eliminate
from surgery.knots import catalog, random_moves


def _compose(p, q):
    return tuple(p[q[i]] for i in range(len(q)))


def _invert(p):
    inverse = [0] * len(p)
    for i, v in enumerate(p):
        inverse[v] = i
    return tuple(inverse)


def _brute_force_homs(p, n):
    """(homs, surjections) by trying every assignment of permutations to the generators"""
    perms = list(itertools.permutations(range(n)))
    identity = tuple(range(n))
    homs = surjections = 0
    for images in itertools.product(perms, repeat=p.generator_count):
        ok = True
        for relator in p.relators:
            x = identity
            for g, sign in relator.letters:
                x = _compose(x, images[g] if sign > 0 else _invert(images[g]))
            if x != identity:
                ok = False
                break
        if not ok:
            continue
        homs += 1
        generated, frontier = {identity}, [identity]
        while frontier:
            frontier = [y for y in {_compose(x, g) for x in frontier for g in images} if y not in generated]
            generated.update(frontier)
        surjections += len(generated) == len(perms)
    return homs, surjections


def test_trefoil_surgery_is_poincare_sphere(trefoil):
    p = surgery_group(SurgerySpec(diagram=trefoil, framing=1))
    result = group_order(p)
    assert result.is_finite
    assert result.order == 120
    assert abelianize(p).is_trivial


def test_trefoil_surgery_binary_tetrahedral(trefoil):
    p = surgery_group(SurgerySpec(diagram=trefoil, framing=3))
    assert group_order(p).order == 24
    assert abelianize(p).torsion == (3,)
    assert group_order(polyhedral_group(3, 3, 2)).order == 24


def test_framing_one_diagram_blackboard_surgery():
    """The writhe-one diagram with its own blackboard framing gives the same group order"""
    p = surgery_group(SurgerySpec(diagram=catalog('trefoil_framing_one')))
    assert group_order(p).order == 120


def test_binary_icosahedral_presentation():
    result = group_order(polyhedral_group(5, 3, 2))
    assert result.order == 120
    assert result.table.order == 120
    assert all(len(row) == 2 * len(result.table.generators) for row in result.table.rows)


@pytest.mark.parametrize("p", range(1, 13))
def test_lens_space_orders(unknot, p):
    result = todd_coxeter(surgery_group(SurgerySpec(diagram=unknot, framing=p)))
    assert result == EnumerationResult.finite(p, result.cosets_used, result.table)
    assert result.order == p


@pytest.mark.parametrize("text, order", [
    ("gens: a,b ; rels: a^2, b^3, abab", 6),
    ("gens: a,b ; rels: a^4, a^2 B^2, B a b a", 8),
    ("gens: a,b ; rels: a^2, b^2, (ab)^3", 6),
    ("gens: a,b ; rels: a b A B, a^3, b^4", 12),
])
def test_small_group_orders(text, order):
    text = text.replace("(ab)^3", "ababab")
    assert todd_coxeter(parse_presentation(text)).order == order


def test_trivial_presentations():
    assert todd_coxeter(trivial_group()).order == 1
    assert group_order(parse_presentation("gens: a,b ; rels: a, b")).order == 1


def test_coset_bound_is_inconclusive():
    result = group_order(polyhedral_group(5, 3, 2), max_cosets=10)
    assert not result.is_finite
    assert result.order is None
    assert json.loads(result.to_json())["outcome"] == "inconclusive"


def test_infinite_group_is_inconclusive():
    assert todd_coxeter(free_group(1), max_cosets=50).outcome == 'inconclusive'


def test_max_cosets_from_config():
    Config.MAX_COSETS = 10
    assert not group_order(polyhedral_group(5, 3, 2)).is_finite


def test_enumeration_json():
    result = todd_coxeter(parse_presentation("gens: a ; rels: a^5"))
    assert json.loads(result.to_json()) == {"cosets_used": result.cosets_used, "order": 5, "outcome": "finite"}


def test_symmetric_group_tables():
    s3 = symmetric_group(3)
    assert s3.order == 6
    assert s3.elements[0] == (0, 1, 2)
    assert all(s3.mult[g][s3.inverse[g]] == 0 for g in range(6))
    assert sorted(size for _, size in s3.conjugacy_classes()) == [1, 2, 3]
    assert sum(size for _, size in symmetric_group(4).conjugacy_classes()) == 24


def test_trefoil_homs_match_brute_force(trefoil_group):
    assert _brute_force_homs(trefoil_group, 3) == (12, 6)
    assert count_homs(trefoil_group, 3) == 12
    assert count_surjections(trefoil_group, 3) == 6


def test_unknot_homs(unknot):
    p = wirtinger(unknot)
    assert count_homs(p, 3) == 6
    assert count_surjections(p, 3) == 0


@pytest.mark.parametrize("text, n", [
    ("gens: a ; rels: a^2", 3),
    ("gens: a,b ; rels: a b A B", 3),
    ("gens: a,b ; rels: a^3, b^2, abab", 4),
    ("gens: a,b,c ; rels: a b a B A B, b c b C B C", 3),
])
def test_hom_counts_match_brute_force(text, n):
    p = parse_presentation(text)
    homs, surjections = _brute_force_homs(p, n)
    assert count_homs(p, n) == homs
    assert count_surjections(p, n) == surjections


def test_involutions_in_s3():
    assert count_homs(parse_presentation("gens: a ; rels: a^2"), 3) == 4


def test_iter_homs_lists_every_hom(trefoil_group):
    reduced = tietze_eliminate(trefoil_group)
    homs = list(iter_homs(reduced, 3))
    assert len(homs) == 12
    assert len(set(homs)) == 12
    assert all(len(images) == reduced.generator_count for images in homs)


def test_free_group_counts_all_assignments():
    assert count_homs(free_group(2), 3) == 36
    assert count_homs(trivial_group(), 4) == 1


def test_hom_workers_give_same_count(trefoil_group):
    Config.HOM_WORKERS = 2
    assert count_homs(trefoil_group, 4) == _brute_force_homs(tietze_eliminate(trefoil_group), 4)[0]


def test_search_limits():
    with pytest.raises(SearchTooLarge):
        count_homs(free_group(10), 4)
    with pytest.raises(SearchTooLarge):
        count_homs(free_group(1), 7)


def test_distinguish_trefoil_from_unknot(trefoil_group, unknot):
    verdict = distinguish(trefoil_group, wirtinger(unknot))
    assert verdict.different
    assert verdict.witness.invariant == "homs_to_S3"
    assert (verdict.witness.left, verdict.witness.right) == ("12", "6")


def test_distinguish_by_abelianization():
    verdict = distinguish(lens_space_group(5), lens_space_group(7))
    assert json.loads(verdict.to_json()) == {
        "verdict": "different",
        "witness": {"invariant": "abelianization", "left": "Z/5", "right": "Z/7"},
    }


def test_distinguish_by_order():
    verdict = distinguish(polyhedral_group(5, 3, 2), trivial_group())
    assert verdict.different
    assert verdict.witness.invariant == "order"
    assert (verdict.witness.left, verdict.witness.right) == ("120", "1")


def test_distinguish_reports_skipped_degrees():
    Config.HOM_BUDGET = 1000
    verdict = distinguish(free_group(3), free_group(3))
    assert not verdict.different
    assert verdict.is_inconclusive
    assert verdict.skipped == ("homs_to_S4",)
    assert json.loads(verdict.to_json()) == {"verdict": "inconclusive", "skipped": ["homs_to_S4"]}


def test_order_still_separates_when_degrees_are_skipped():
    Config.HOM_BUDGET = 10
    verdict = distinguish(polyhedral_group(5, 3, 2), trivial_group())
    assert verdict.different
    assert verdict.witness.invariant == "order"
    assert not verdict.is_inconclusive


def test_indistinguishable_is_not_a_proof(trefoil):
    p = surgery_group(SurgerySpec(diagram=trefoil, framing=1))
    verdict = distinguish(p, polyhedral_group(5, 3, 2))
    assert not verdict.different
    assert json.loads(verdict.to_json()) == {"verdict": "indistinguishable"}


@pytest.mark.parametrize("seed", range(10))
def test_invariants_survive_reidemeister_moves(trefoil, trefoil_group, seed):
    d = random_moves(trefoil, 3, seed=seed)
    p = wirtinger(d)
    assert abelianize(p) == abelianize(trefoil_group)
    reduced = tietze_eliminate(p)
    for n in (2, 3, 4):
        assert count_homs(reduced, n) == count_homs(trefoil_group, n)
    assert group_order(surgery_group(SurgerySpec(diagram=d, framing=1))).order == 120
