import pytest

from surgery.errors import MalformedPresentation, UnknownGenerator
from surgery.groups import (
    AbelianInvariants,
    Word,
    abelianize,
    commutator,
    cyclic_key,
    cyclic_reduce,
    direct_product,
    direct_sum,
    format_presentation,
    format_word,
    free_product,
    free_reduce,
    is_divisibility_chain,
    parse_any,
    parse_presentation,
    parse_word,
    presentation,
    presentation_from_json,
    presentation_to_json,
    quotient_by_relator,
    smith_normal_form,
    tietze_eliminate,
    torsion_order,
)

AB = ['a', 'b']
ABC = ['a', 'b', 'c']


@pytest.mark.parametrize("text, generators, expected", [
    ("a b a B A B", AB, "a b a B A B"),
    ("aba", AB, "a b a"),
    ("c a b a^-2", ABC, "c a b A^2"),
    ("A^2", ['a'], "A^2"),
    ("a a a", ['a'], "a^3"),
    ("1", ['a'], "1"),
    ("", ['a'], "1"),
])
def test_parse_and_format_words(text, generators, expected):
    assert format_word(parse_word(text, generators), generators) == expected


def test_unknown_generator():
    with pytest.raises(UnknownGenerator):
        parse_word("x", ['a'])


def test_word_algebra():
    a, b = Word.power_of(0), Word.power_of(1)
    assert a * a.inverse() == Word()
    assert free_reduce(a * a.inverse() * b).syllables == ((1, 1),)
    assert (a * b) ** -1 == b.inverse() * a.inverse()
    assert (a * b) ** 2 == a * b * a * b
    assert len(a ** 3) == 3

    w = parse_word("a^3 B a", AB)
    assert w.exponent_sum(0) == 4
    assert w.exponent_sum() == 3
    assert w.occurrences(1) == 1


def test_cyclic_reduction_and_keys():
    assert cyclic_reduce(parse_word("b a B", AB)) == parse_word("a", AB)
    key = cyclic_key(parse_word("a b", AB))
    assert cyclic_key(parse_word("b a", AB)) == key
    assert cyclic_key(parse_word("B A", AB)) == key


def test_commutator():
    assert format_word(commutator(Word.power_of(0), Word.power_of(1)), AB) == "a b A B"


def test_equation_relators():
    """u = v is read as the relator u v^-1"""
    p = parse_presentation("gens: a,b ; rels: aba = bab")
    assert p.generators == ('a', 'b')
    assert format_presentation(p) == "gens: a,b ; rels: a b a B A B"


@pytest.mark.parametrize("text", [
    "gens: a,b ; rels: a b a B A B",
    "gens: a,b,c ; rels: a^5 B^3, a^5 C^2, a^5 C B A",
    "gens: a ; rels:",
    "gens:  ; rels:",
])
def test_text_and_json_codecs_agree(text):
    p = parse_presentation(text)
    assert parse_presentation(format_presentation(p)) == p
    assert presentation_from_json(presentation_to_json(p)) == p
    assert parse_any(presentation_to_json(p)) == p


def test_presentation_json_layout():
    p = parse_presentation("gens: a ; rels: a^3")
    assert presentation_to_json(p) == '{"generators": ["a"], "relators": [[["a", 3]]]}'


@pytest.mark.parametrize("text", [
    "generators a b",
    "gens: A ; rels:",
    "gens: a,a ; rels:",
    "gens: a ; rels: a = b = a",
])
def test_malformed_presentations(text):
    with pytest.raises(MalformedPresentation):
        parse_presentation(text)


def test_relator_with_unknown_generator():
    with pytest.raises(UnknownGenerator):
        parse_presentation("gens: a ; rels: x")
    with pytest.raises(UnknownGenerator):
        presentation_from_json('{"generators": ["a"], "relators": [[["b", 1]]]}')
    with pytest.raises(MalformedPresentation):
        presentation_from_json('{"generators": ["a"], "relators": [[["a", 0]]]}')


@pytest.mark.parametrize("matrix, factors, rank", [
    ([[2, 4], [6, 8]], [2, 4], 2),
    ([[2, 0], [0, 3]], [1, 6], 2),
    ([[6]], [6], 1),
    ([[0, 0], [0, 0]], [], 0),
    ([[1, -1]], [1], 1),
    ([], [], 0),
])
def test_smith_normal_form(matrix, factors, rank):
    assert smith_normal_form(matrix) == (factors, rank)
    assert is_divisibility_chain(factors)


def test_abelianize_examples():
    assert str(abelianize(parse_presentation("gens: a,b ; rels: aba = bab"))) == "Z^1"
    assert abelianize(parse_presentation("gens: a ; rels: a^6")) == AbelianInvariants(torsion=(6,))
    assert abelianize(parse_presentation("gens: a,b ; rels: a^2, b^3")).torsion == (6,)
    assert abelianize(parse_presentation("gens: a,b ; rels:")).free_rank == 2
    assert str(abelianize(parse_presentation("gens:  ; rels:"))) == "0"
    assert abelianize(parse_presentation("gens: a,b,c ; rels: a^3 B^3, a^3 C^2, a^3 C B A")).torsion == (3,)


def test_direct_sum_keeps_divisibility():
    total = direct_sum(AbelianInvariants(free_rank=1, torsion=(2,)), AbelianInvariants(torsion=(3,)))
    assert total == AbelianInvariants(free_rank=1, torsion=(6,))
    assert torsion_order(total) == 6
    assert str(total) == "Z^1 + Z/6"


def test_free_product_renames_clashes():
    p = parse_presentation("gens: a ; rels: a^2")
    q = free_product(p, p)
    assert q.generators == ('a', 'a2')
    assert format_presentation(q) == "gens: a,a2 ; rels: a^2, a2^2"


def test_direct_product_of_cyclic_groups():
    p = direct_product(parse_presentation("gens: a ; rels: a^2"), parse_presentation("gens: a ; rels: a^3"))
    assert abelianize(p).torsion == (6,)


def test_quotient_by_relator():
    p = parse_presentation("gens: a ; rels:")
    assert quotient_by_relator(p, Word()) == p
    assert abelianize(quotient_by_relator(p, Word.power_of(0, 4))).torsion == (4,)
    with pytest.raises(UnknownGenerator):
        quotient_by_relator(p, Word.power_of(3))


def test_presentation_validation():
    with pytest.raises(MalformedPresentation):
        presentation(['a', 'a'])
    with pytest.raises(UnknownGenerator):
        presentation(['a'], [Word.power_of(1)])


def test_tietze_reduces_trefoil_group(trefoil_group):
    reduced = tietze_eliminate(trefoil_group)
    assert reduced.generator_count == 2
    assert len(reduced.relators) == 1
    assert abelianize(reduced) == abelianize(trefoil_group)


def test_tietze_drops_trivial_and_duplicate_relators():
    p = parse_presentation("gens: a,b ; rels: a A, a b a B A B, b a b A B A")
    reduced = tietze_eliminate(p)
    assert reduced.generator_count == 2
    assert len(reduced.relators) == 1


def test_tietze_eliminates_defined_generator():
    p = parse_presentation("gens: a,b ; rels: a B^2, b^6")
    reduced = tietze_eliminate(p)
    assert reduced.generators == ('b',)
    assert abelianize(reduced).torsion == (6,)
