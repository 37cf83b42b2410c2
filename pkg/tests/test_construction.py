"""Tests for the tree-controlled grammars with width-2 controls."""
import random

import pytest

from tcgtools.core.automata import equivalent
from tcgtools.core.regex import RegularExpression, Star, union_all, word_regex
from tcgtools.subregular.slt import is_slt_k
from tcgtools.transforms.construction import (
    control_coherent, control_rlg_one_var, kuroda_to_tc, one_var_star_grammar, rl1p_semantics,
    star_of_finite_union_free,
)
from tcgtools.transforms.kuroda import KurodaGrammar, NotKurodaError, enumerate_monotone, monotone_to_kuroda
from tcgtools.treectrl.derivation import tc_certify, tc_enumerate
from tcgtools.treectrl.grammar import Cfg, validate_tc
from tcgtools.witnesses import fixtures


@pytest.fixture(scope='module')
def abc_construction():
    source = fixtures.abc_monotone_grammar()
    kuroda = monotone_to_kuroda(source)
    return source, kuroda, kuroda_to_tc(kuroda)


def _random_words(rng):
    return {tuple(rng.choice('ab') for _ in range(rng.randint(0, 3))) for _ in range(rng.randint(0, 4))}


def test_abc_construction_is_valid(abc_construction):
    _, kuroda, construction = abc_construction
    assert validate_tc(construction.tc) == []
    assert len(construction.marker_map) == len(kuroda.context_rules())
    assert list(construction.hat_map) == ['a', 'b', 'c']
    assert len(construction.parts.n12) == len(construction.parts.n1) == len(construction.parts.n2)


def test_abc_control_is_slt_two(abc_construction):
    _, _, construction = abc_construction
    verdict = is_slt_k(construction.tc.control, 2)
    assert verdict
    assert verdict.description == construction.control_desc
    assert control_coherent(construction)
    assert control_rlg_one_var(construction).n_vars == 1


def test_abc_words_up_to_six(abc_construction):
    source, _, construction = abc_construction
    result = tc_enumerate(construction.tc, 6)
    assert result.words == enumerate_monotone(source, 6)
    for word in result.words:
        assert tc_certify(construction.tc, result.traces[word], word)


@pytest.mark.slow
@pytest.mark.parametrize('max_len', [9, 12])
def test_abc_words_longer(abc_construction, max_len):
    source, _, construction = abc_construction
    assert tc_enumerate(construction.tc, max_len).words == enumerate_monotone(source, max_len)


def test_empty_rule_keeps_the_empty_word():
    kuroda = KurodaGrammar(['S', 'A'], ['a'], [(('S',), ()), (('S',), ('A', 'A')), (('A',), ('a',))], 'S')
    construction = kuroda_to_tc(kuroda)
    assert ('S', ('S',)) not in construction.parts.p_d
    assert validate_tc(construction.tc) == []
    assert tc_enumerate(construction.tc, 4).words == [(), ('a', 'a')]


def test_construction_needs_kuroda_rules(abc_grammar):
    with pytest.raises(NotKurodaError):
        kuroda_to_tc(abc_grammar)


def test_star_of_finite_union_free():
    rng = random.Random(9)
    alphabet = ('a', 'b')
    for _ in range(20):
        words = _random_words(rng)
        expr = star_of_finite_union_free(words)
        assert expr.is_union_free()
        star = Star(union_all(word_regex(word) for word in words))
        assert equivalent(RegularExpression(expr, alphabet).to_dfa(), RegularExpression(star, alphabet).to_dfa())


def test_star_of_the_empty_set():
    expr = star_of_finite_union_free([])
    assert str(expr) == '%eps'
    assert RegularExpression(expr, ('a',)).to_dfa().accepts(())


def test_one_var_star_grammar():
    rng = random.Random(13)
    alphabet = ('a', 'b')
    for _ in range(10):
        words = sorted(_random_words(rng) - {()})
        grammar = one_var_star_grammar(words, alphabet)
        assert grammar.n_vars == 1
        star = RegularExpression(Star(union_all(word_regex(word) for word in words)), alphabet).to_dfa()
        assert equivalent(grammar.to_dfa(), star)


def test_rl1p_semantics():
    core = Cfg(['S', 'A'], ['a', 'b'], [('S', 'ab'), ('S', 'aA'), ('A', 'b'), ('S', 'b')], 'S')
    assert rl1p_semantics(core, ('S',)) == {('a', 'b'), ('b',)}
    assert rl1p_semantics(core, ('A',)) == frozenset()
    assert rl1p_semantics(core, None) == frozenset()
    assert rl1p_semantics(core, ('S', 'S')) == frozenset()
