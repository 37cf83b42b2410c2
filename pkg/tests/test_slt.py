"""Tests for strictly locally testable descriptions and their deciders."""
import itertools
import random

import pytest

from tcgtools.core.automata import Dfa, StateBudgetExceeded, UnknownSymbolError, enumerate_dfa, equivalent
from tcgtools.subregular.slt import (
    SltDescription, SltWidthError, canonical_slt, five_state_dfa, is_slt_k, is_slt_upto, slt1_to_rlg,
    slt_member, slt_to_dfa,
)
from tcgtools.utils import words_of_length
from tcgtools.witnesses.catalog import build_witness


def _random_width_one(rng, alphabet=('a', 'b', 'c')):

    def subset():
        return [(a,) for a in alphabet if rng.random() < 0.5]

    return SltDescription(1, alphabet, B=subset(), I=subset(), E=subset(), F=[()] if rng.random() < 0.5 else [])


def _all_descriptions(k, alphabet):
    """Every description of width k over alphabet."""
    windows = list(words_of_length(alphabet, k))
    short = [word for n in range(k) for word in words_of_length(alphabet, n)]

    def subsets(items):
        return itertools.chain.from_iterable(itertools.combinations(items, r) for r in range(len(items) + 1))

    for B, I, E in itertools.product(list(subsets(windows)), repeat=3):
        for F in subsets(short):
            yield SltDescription(k, alphabet, B, I, E, F)


def _all_small_dfas(max_states, alphabet):
    """Every DFA with start state 0 and at most max_states states."""
    for n in range(1, max_states + 1):
        cells = n * len(alphabet)
        for targets in itertools.product(range(n), repeat=cells):
            delta = [targets[q * len(alphabet):(q + 1) * len(alphabet)] for q in range(n)]
            for r in range(n + 1):
                for finals in itertools.combinations(range(n), r):
                    yield Dfa(alphabet, delta, 0, finals)


def _exhaustive_slt_k(k, alphabet):
    return {desc.to_dfa().minimize() for desc in _all_descriptions(k, alphabet)}


def test_description_checks_word_lengths():
    with pytest.raises(SltWidthError):
        SltDescription(2, ('a',), B=['a'])
    with pytest.raises(SltWidthError):
        SltDescription(1, ('a',), F=['a'])
    with pytest.raises(SltWidthError):
        SltDescription(0, ('a',))
    with pytest.raises(UnknownSymbolError):
        SltDescription(1, ('a',), I=['b'])


def test_member_uses_interior_windows_only():
    """The first and last windows need not be interior windows."""
    desc = SltDescription(2, ('a', 'b'), B=[('a', 'b')], E=[('b', 'a')])
    assert slt_member(desc, ('a', 'b', 'a'))
    assert not slt_member(desc, ('a', 'b', 'b', 'a'))
    assert not slt_member(desc, ('a', 'b'))


def test_member_short_words():
    desc = SltDescription(2, ('a', 'b'), B=[('a', 'a')], E=[('a', 'a')], F=[(), ('b',)])
    assert slt_member(desc, ())
    assert slt_member(desc, ('b',))
    assert not slt_member(desc, ('a',))
    assert slt_member(desc, ('a', 'a'))
    with pytest.raises(UnknownSymbolError):
        slt_member(desc, ('c',))


def test_l2_description():
    desc = SltDescription(1, ('a', 'b', 'c'), B=['a', 'b'], I=['b', 'c'], E=['a', 'c'])
    dfa = slt_to_dfa(desc)
    assert dfa.n_states == 5
    assert dfa.accepts(('a',))
    assert dfa.accepts(('b', 'c', 'b', 'a'))
    assert not dfa.accepts(('c',))


def test_five_state_matches_window_construction():
    """50 random width-1 descriptions, compared on every word up to length 5."""
    rng = random.Random(7)
    for _ in range(50):
        desc = _random_width_one(rng)
        five = five_state_dfa(desc)
        assert five.n_states == 5
        assert equivalent(five, slt_to_dfa(desc))
        for n in range(6):
            for word in words_of_length(desc.alphabet, n):
                assert five.accepts(word) == slt_member(desc, word)


def test_five_state_needs_width_one():
    with pytest.raises(SltWidthError):
        five_state_dfa(SltDescription(2, ('a',)))
    with pytest.raises(SltWidthError):
        slt_to_dfa(SltDescription(2, ('a',)), method='five-state')
    with pytest.raises(ValueError):
        slt_to_dfa(SltDescription(1, ('a',)), method='bogus')


def test_two_variable_grammar():
    rng = random.Random(8)
    for _ in range(50):
        desc = _random_width_one(rng)
        grammar = slt1_to_rlg(desc)
        assert grammar.n_vars == 2
        assert equivalent(grammar.to_dfa(), slt_to_dfa(desc))
    with pytest.raises(SltWidthError):
        slt1_to_rlg(SltDescription(2, ('a',)))


def test_canonical_description_of_a_finite_language():
    dfa = Dfa.from_words(('a', 'b'), [('a', 'b', 'b')])
    desc = canonical_slt(dfa, 2)
    assert desc.B == {('a', 'b')}
    assert desc.I == frozenset()
    assert desc.E == {('b', 'b')}
    assert desc.F == frozenset()


def test_l1_is_not_slt(l1):
    for k in range(1, 5):
        verdict = is_slt_k(l1, k)
        assert not verdict
        assert verdict.counterexample is not None
        assert not l1.accepts(verdict.counterexample)
    bounded = is_slt_upto(l1, 4)
    assert not bounded
    assert bounded.k == 4


def test_positive_verdict_regenerates_the_language():
    dfa = slt_to_dfa(SltDescription(2, ('a', 'b'), B=[('a', 'b')], I=[('b', 'b')], E=[('b', 'b')]))
    verdict = is_slt_upto(dfa, 4)
    assert verdict
    assert verdict.k == 2
    assert equivalent(slt_to_dfa(verdict.description), dfa)


def test_is_slt_upto_needs_positive_bound(l1):
    with pytest.raises(SltWidthError):
        is_slt_upto(l1, 0)


def test_decider_agrees_with_exhaustive_search_width_one():
    """Every DFA with at most three states over two letters, k = 1."""
    alphabet = ('a', 'b')
    languages = _exhaustive_slt_k(1, alphabet)
    for dfa in _all_small_dfas(3, alphabet):
        assert bool(is_slt_k(dfa, 1)) == (dfa.minimize() in languages), dfa


@pytest.mark.slow
def test_decider_agrees_with_exhaustive_search_width_two():
    alphabet = ('a', 'b')
    languages = _exhaustive_slt_k(2, alphabet)
    for dfa in _all_small_dfas(3, alphabet):
        assert bool(is_slt_k(dfa, 2)) == (dfa.minimize() in languages), dfa


def _catalog_descriptions():
    cases = [('l-l2', None), ('l-l6', None), ('l-l7', None)]
    cases += [('l-l3', n) for n in range(2, 6)] + [('l-l4', n) for n in range(1, 4)]
    cases += [('l-l5', n) for n in range(1, 4)] + [('l-l9', n) for n in range(1, 4)]
    return [build_witness(id, n).sources['slt'] for id, n in cases]


def test_member_agrees_with_the_automaton_on_catalog_descriptions():
    for desc in _catalog_descriptions():
        dfa = slt_to_dfa(desc)
        for n in range(desc.k + 5):
            for word in words_of_length(desc.alphabet, n):
                assert slt_member(desc, word) == dfa.accepts(word), (desc, word)


def _without_next_length(rng, k, alphabet):
    """A random width-k description whose language has no word of length k + 1."""
    windows = list(words_of_length(alphabet, k))
    B = [w for w in windows if rng.random() < 0.5]
    follow = {b[1:] for b in B}
    E = [w for w in windows if w[:k - 1] not in follow and rng.random() < 0.7]
    I = [w for w in windows if rng.random() < 0.5]
    short = [w for n in range(k) for w in words_of_length(alphabet, n)]
    F = [w for w in short if rng.random() < 0.4]
    return SltDescription(k, alphabet, B, I, E, F)


def test_wider_windows_keep_languages_without_words_of_the_next_length():
    rng = random.Random(9)
    for _ in range(40):
        k = rng.choice([1, 2])
        desc = _without_next_length(rng, k, ('a', 'b'))
        dfa = slt_to_dfa(desc)
        assert is_slt_k(dfa, k)
        for width in range(k, 4):
            if any(len(word) == width + 1 for word in enumerate_dfa(dfa, width + 1)):
                break
            assert is_slt_k(dfa, width + 1), (desc, width + 1)


def test_words_of_the_next_length_can_break_wider_windows():
    """{a, aa}: at width 2, aa must be in B and E, so aaa has no interior window left to reject it."""
    dfa = Dfa.from_words(('a',), [('a',), ('a', 'a')])
    assert is_slt_k(dfa, 1)
    assert not is_slt_k(dfa, 2)
    assert is_slt_k(dfa, 3)


def test_window_construction_state_budget():
    windows = list(words_of_length(('a', 'b'), 2))
    desc = SltDescription(2, ('a', 'b'), B=windows, I=windows, E=windows)
    with pytest.raises(StateBudgetExceeded):
        slt_to_dfa(desc, max_states=3)
    with pytest.raises(StateBudgetExceeded):
        desc.to_dfa(max_states=3)
    assert desc.to_dfa(max_states=100) == slt_to_dfa(desc)
