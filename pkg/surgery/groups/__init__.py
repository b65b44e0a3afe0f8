"""Finitely presented groups: words, combinators, Tietze elimination and abelianization."""

from .models import AbelianInvariants, IntegerMatrix, Presentation, Word
from .presentations import (
    commutator,
    direct_product,
    format_presentation,
    free_product,
    parse_any,
    parse_presentation,
    presentation,
    presentation_from_json,
    presentation_to_json,
    quotient_by_relator,
    tietze_eliminate,
)
from .snf import abelianize, direct_sum, exponent_matrix, is_divisibility_chain, smith_normal_form, torsion_order
from .words import cyclic_key, cyclic_reduce, format_word, free_reduce, parse_word, substitute

__all__ = [
    'AbelianInvariants',
    'IntegerMatrix',
    'Presentation',
    'Word',
    'abelianize',
    'commutator',
    'cyclic_key',
    'cyclic_reduce',
    'direct_product',
    'direct_sum',
    'exponent_matrix',
    'format_presentation',
    'format_word',
    'free_product',
    'free_reduce',
    'is_divisibility_chain',
    'parse_any',
    'parse_presentation',
    'parse_word',
    'presentation',
    'presentation_from_json',
    'presentation_to_json',
    'quotient_by_relator',
    'smith_normal_form',
    'substitute',
    'tietze_eliminate',
    'torsion_order',
]
