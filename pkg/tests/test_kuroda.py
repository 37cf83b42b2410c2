import pytest

from tcgtools.transforms.kuroda import (
    KurodaGrammar, MonotoneGrammar, NotKurodaError, NotMonotoneError, chain_context_rules, enumerate_monotone,
    kuroda_shape, monotone_to_kuroda, separate_terminals, split_bodies,
)


def _abc(n):
    return tuple('a' * n + 'b' * n + 'c' * n)


def test_abc_grammar_words(abc_grammar):
    assert enumerate_monotone(abc_grammar, 9) == [_abc(1), _abc(2), _abc(3)]


def test_monotone_checks():
    with pytest.raises(NotMonotoneError):
        MonotoneGrammar(['S', 'A'], ['a'], [(('S', 'A'), ('S',))], 'S')
    with pytest.raises(NotMonotoneError):
        MonotoneGrammar(['S'], ['a'], [(('a',), ('a', 'a'))], 'S')
    with pytest.raises(NotMonotoneError):
        MonotoneGrammar(['S'], ['a'], [(('S',), ()), (('S',), ('a', 'S'))], 'S')
    with pytest.raises(NotMonotoneError):
        MonotoneGrammar(['S'], ['a'], [(('S',), ('b',))], 'S')
    grammar = MonotoneGrammar(['S'], ['a'], [(('S',), ()), (('S',), ('a',))], 'S')
    assert grammar.has_empty_rule


def test_kuroda_checks():
    with pytest.raises(NotKurodaError):
        KurodaGrammar(['S'], ['a'], [(('S',), ('a', 'a'))], 'S')
    with pytest.raises(NotKurodaError):
        KurodaGrammar(['S', 'A'], ['a'], [(('S', 'A'), ('A', 'a'))], 'S')


def test_shapes():
    grammar = KurodaGrammar(['S', 'A', 'B'], ['a'], [
        (('S',), ()), (('A', 'B'), ('B', 'A')), (('A',), ('A', 'B')), (('A',), ('B',)), (('A',), ('a',)),
    ], 'S')
    shapes = [kuroda_shape(grammar, lhs, rhs) for lhs, rhs in grammar.rules]
    assert shapes == ['empty', 'context', 'binary', 'chain', 'terminal']
    assert grammar.context_rules() == [(('A', 'B'), ('B', 'A'))]
    assert kuroda_shape(grammar, ('A',), ('a', 'A')) is None


def test_separate_terminals(abc_grammar):
    separated = separate_terminals(abc_grammar)
    assert 'X_a' in separated.vars
    for lhs, rhs in separated.rules:
        if len(rhs) > 1 or len(lhs) > 1:
            assert all(separated.is_nonterminal(x) for x in lhs + rhs)
    assert enumerate_monotone(separated, 6) == enumerate_monotone(abc_grammar, 6)


def test_chain_context_rules():
    grammar = MonotoneGrammar(['S', 'A', 'B', 'C'], ['a'], [
        (('S',), ('A', 'B', 'C')), (('A', 'B', 'C'), ('C', 'C', 'C', 'C')), (('C',), ('a',)),
    ], 'S')
    chained = chain_context_rules(grammar)
    assert all(len(lhs) <= 2 for lhs, _ in chained.rules)
    for lhs, rhs in chained.rules:
        if len(lhs) == 2:
            assert len(rhs) == 2
    assert enumerate_monotone(chained, 5) == enumerate_monotone(grammar, 5) == [('a',) * 4]


def test_split_bodies(abc_grammar):
    split = split_bodies(separate_terminals(abc_grammar))
    assert all(len(rhs) <= 2 for lhs, rhs in split.rules if len(lhs) == 1)
    assert enumerate_monotone(split, 6) == enumerate_monotone(abc_grammar, 6)


def test_monotone_to_kuroda(abc_grammar):
    kuroda = monotone_to_kuroda(abc_grammar)
    assert isinstance(kuroda, KurodaGrammar)
    assert all(kuroda_shape(kuroda, lhs, rhs) for lhs, rhs in kuroda.rules)
    assert kuroda.terminals == abc_grammar.terminals
    assert enumerate_monotone(kuroda, 6) == [_abc(1), _abc(2)]


def test_empty_rule_survives():
    grammar = MonotoneGrammar(['S', 'A'], ['a'], [(('S',), ()), (('S',), ('a', 'A')), (('A',), ('a',))], 'S')
    kuroda = monotone_to_kuroda(grammar)
    assert kuroda.has_empty_rule
    assert enumerate_monotone(kuroda, 3) == [(), ('a', 'a')]
