import pytest

from tcgtools.core.automata import Dfa, determinize_minimize, equivalent
from tcgtools.core.grammars import GrammarError, RightLinearGrammar, Rule, dfa_to_rlg, rlg_to_nfa
from tcgtools.witnesses.catalog import build_witness, witness_ids


def test_rule_words_are_tuples():
    rule = Rule('S', 'ab', 'S')
    assert rule.word == ('a', 'b')
    assert str(rule) == 'S -> a b S'
    assert str(Rule('S', ())) == 'S -> λ'
    assert Rule('S', '').terminating


def test_grammar_validation():
    with pytest.raises(GrammarError):
        RightLinearGrammar(['S'], ['a'], [Rule('T', 'a')], 'S')
    with pytest.raises(GrammarError):
        RightLinearGrammar(['S'], ['a'], [Rule('S', 'a', 'T')], 'S')
    with pytest.raises(GrammarError):
        RightLinearGrammar(['S'], ['a'], [Rule('S', 'b')], 'S')
    with pytest.raises(GrammarError):
        RightLinearGrammar(['S'], ['a'], [], 'T')
    with pytest.raises(GrammarError):
        RightLinearGrammar(['a'], ['a'], [], 'a')


def test_duplicate_rules_are_dropped():
    grammar = RightLinearGrammar(['S'], ['a'], [Rule('S', 'a'), ('S', 'a', None)], 'S')
    assert grammar.n_prods == 1
    assert grammar.n_vars == 1


def test_long_rule_words(l1):
    grammar = RightLinearGrammar(['S'], ['a', 'b'], [Rule('S', 'ab', 'S'), Rule('S', 'b')], 'S')
    dfa = grammar.to_dfa()
    assert dfa.accepts(('b',))
    assert dfa.accepts(('a', 'b', 'a', 'b', 'b'))
    assert not dfa.accepts(('a', 'b'))
    assert rlg_to_nfa(grammar).accepts(('a', 'b', 'b'))


def test_dfa_to_rlg_keeps_the_language(l1):
    grammar = dfa_to_rlg(l1)
    assert grammar.n_vars == l1.n_states
    assert grammar.vars[0] == 'Q0'
    assert equivalent(grammar.to_dfa(), l1)


def test_trim_removes_useless_nonterminals():
    grammar = RightLinearGrammar(['S', 'A', 'B'], ['a'], [
        Rule('S', 'a'), Rule('S', 'a', 'A'), Rule('A', 'a', 'A'), Rule('B', 'a'),
    ], 'S')
    trimmed = grammar.trim()
    assert trimmed.vars == ('S',)
    assert trimmed.rules == (Rule('S', 'a'),)


def test_reduce_inlines_terminating_nonterminals():
    dfa = Dfa.from_words(['a'], [('a',)])
    reduced = dfa_to_rlg(dfa).reduce()
    assert reduced.n_vars == 1
    assert [str(rule) for rule in reduced.rules] == ['Q0 -> a']
    assert equivalent(reduced.to_dfa(), dfa)


def test_empty_grammar_generates_nothing():
    grammar = RightLinearGrammar(['S'], ['a'], [], 'S')
    assert grammar.to_dfa().is_empty()


@pytest.mark.parametrize('id', witness_ids())
def test_witness_languages_survive_the_grammar_round_trip(id):
    """Regex to DFA to right-linear grammar to NFA and back to a minimal DFA."""
    regex = build_witness(id).sources['regex']
    dfa = regex.to_dfa()
    nfa = rlg_to_nfa(dfa_to_rlg(dfa))
    back = determinize_minimize(nfa)
    assert equivalent(back, dfa)
    assert back == dfa
