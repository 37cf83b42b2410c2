"""Tests for tree-controlled grammars: stepping, enumeration and certification."""
import random

import pytest

from tcgtools.core.automata import Dfa, equivalent
from tcgtools.core.regex import RegularExpression
from tcgtools.treectrl.derivation import (
    DerivationTrace, LevelConfig, TreeControlError, tc_certify, tc_enumerate, tc_step,
)
from tcgtools.treectrl.grammar import Cfg, GrammarShapeError, TcGrammar, validate_tc
from tcgtools.transforms.construction import rl1p_semantics
from tcgtools.witnesses import fixtures


def _abc(n):
    return tuple('a' * n + 'b' * n + 'c' * n)


def _g2_trace(n):
    """The derivation of a^n b^n c^n in the second example."""
    levels = [[(0, 'S', tuple('aAbBcC'))]]
    for level in range(n - 1):
        m = level + 1
        positions = [m, 2 * m + 1, 3 * m + 2]
        last = level == n - 2
        levels.append([
            (p, v, (t,) if last else (t, v)) for p, v, t in zip(positions, 'ABC', 'abc')
        ])
    return DerivationTrace(levels)


def test_cfg_checks():
    with pytest.raises(GrammarShapeError):
        Cfg(['S'], ['a'], [('T', 'a')], 'S')
    with pytest.raises(GrammarShapeError):
        Cfg(['S'], ['a'], [('S', 'b')], 'S')
    with pytest.raises(GrammarShapeError):
        Cfg(['S'], ['S'], [], 'S')
    core = Cfg(['S'], ['a'], {'S': [('S', 'S'), ('a',), ('a',)]}, 'S')
    assert core.n_rules == 2
    assert core.symbols == ('S', 'a')


def test_validate_tc(g1):
    assert validate_tc(g1) == []
    erasing = Cfg(['S', 'A'], ['a'], [('S', 'A'), ('A', ())], 'S')
    control = Dfa.universal(erasing.symbols)
    assert validate_tc(TcGrammar(erasing, control)) == ['erasing rule A -> λ']
    start_on_right = Cfg(['S'], ['a'], [('S', ()), ('S', 'aS')], 'S')
    violations = validate_tc(TcGrammar(start_on_right, Dfa.universal(start_on_right.symbols)))
    assert len(violations) == 1
    assert 'right-hand side' in violations[0]
    mismatch = TcGrammar(g1.core, Dfa.universal(('S',)))
    assert any('control alphabet' in v for v in validate_tc(mismatch))


def test_enumerate_rejects_invalid_grammars(g1):
    with pytest.raises(TreeControlError):
        tc_enumerate(TcGrammar(g1.core, Dfa.universal(('S',))), 4)


def test_step_rewrites_every_active_nonterminal(g2):
    config = LevelConfig(tuple((x, False) for x in 'aAbBcC'), 1)
    successors = tc_step(config, g2.core)
    assert len(successors) == 8
    full = [s for s in successors if s.sentential_form == tuple('aaAbbBccC')]
    assert len(full) == 1
    assert full[0].level_word == tuple('aAbBcC')
    assert full[0].depth == 2


def test_step_of_a_final_configuration(g2):
    config = LevelConfig(tuple((x, False) for x in 'abc'), 1)
    assert config.is_final(g2.core)
    with pytest.raises(TreeControlError):
        tc_step(config, g2.core)


def test_first_example_gives_powers_of_two(g1):
    result = tc_enumerate(g1, 64)
    assert result.words == [('a',) * 2 ** i for i in range(7)]


def test_second_example_gives_equal_blocks(g2):
    result = tc_enumerate(g2, 30)
    assert result.words == [_abc(n) for n in range(2, 11)]
    for word in result.words:
        assert tc_certify(g2, result.traces[word], word)


def test_control_grammars_of_the_examples(g1, g2):
    for grammar, control in [(g1, fixtures.example_g1_control_grammar()),
                             (g2, fixtures.example_g2_control_grammar())]:
        assert control.n_prods == 2
        assert equivalent(control.to_dfa(), grammar.control)


def test_max_depth(g1):
    result = tc_enumerate(g1, 64, max_depth=2)
    assert result.words == [('a',), ('a', 'a')]


def test_empty_word():
    core = Cfg(['S'], ['a'], [('S', ()), ('S', 'a')], 'S')
    grammar = TcGrammar(core, Dfa.from_words(core.symbols, [('S',)]))
    assert tc_enumerate(grammar, 2).words == [(), ('a',)]


def test_certify_accepts_a_handwritten_trace(g2):
    assert tc_certify(g2, _g2_trace(3), _abc(3))
    assert tc_certify(g2, _g2_trace(2), _abc(2))


def test_certify_diagnostics(g2):
    trace = _g2_trace(3)
    wrong_word = tc_certify(g2, trace, _abc(2))
    assert not wrong_word
    assert 'derives' in wrong_word.diagnostic

    unfinished = tc_certify(g2, DerivationTrace(trace.levels[:2]))
    assert not unfinished
    assert 'active nonterminals' in unfinished.diagnostic

    partial = DerivationTrace([trace.levels[0], trace.levels[1][:2]])
    assert 'cover' in tc_certify(g2, partial).diagnostic

    bad_rule = DerivationTrace([[(0, 'S', ('a', 'b', 'c'))]])
    assert 'no rule' in tc_certify(g2, bad_rule).diagnostic

    mixed = DerivationTrace([
        trace.levels[0],
        [(1, 'A', ('a', 'A')), (3, 'B', ('b',)), (5, 'C', ('c',))],
        [(2, 'A', ('a',))],
    ])
    assert 'control rejects' in tc_certify(g2, mixed).diagnostic

    extra = DerivationTrace(list(_g2_trace(2).levels) + [[(0, 'S', tuple('aAbBcC'))]])
    assert 'already final' in tc_certify(g2, extra).diagnostic


def test_one_word_controls_collapse_to_start_bodies():
    rng = random.Random(10)
    for _ in range(25):
        core = fixtures.random_core(rng)
        word = fixtures.random_control_word(rng, core)
        control = Dfa.from_words(core.symbols, [] if word is None else [word])
        found = set(tc_enumerate(TcGrammar(core, control), 3).words)
        assert found == rl1p_semantics(core, word)


def test_finite_languages_with_the_start_control():
    rng = random.Random(11)
    for _ in range(20):
        words = {tuple(rng.choice('ab') for _ in range(rng.randint(1, 3))) for _ in range(rng.randint(1, 4))}
        core = Cfg(['S'], ['a', 'b'], [('S', word) for word in words], 'S')
        grammar = TcGrammar(core, Dfa.from_words(core.symbols, [('S',)]))
        assert set(tc_enumerate(grammar, 3).words) == words


def test_wider_control_keeps_words(g2):
    wider = RegularExpression.from_text('S | (a A b B c C)*', g2.core.symbols).to_dfa()
    narrow = set(tc_enumerate(g2, 15).words)
    wide = set(tc_enumerate(TcGrammar(g2.core, wider), 15).words)
    assert narrow <= wide


def _trees(core, symbol, budget):
    """Every derivation tree below symbol whose yield has at most budget symbols.

    A tree is ``(symbol, children)`` with children None for a terminal leaf.
    Cores must have no unit rules so that every recursion shrinks the budget.
    """
    if not core.is_nonterminal(symbol):
        if budget >= 1:
            yield symbol, None
        return
    for body in core.rules[symbol]:
        if not body:
            yield symbol, ()
            continue
        for children in _forests(core, body, budget):
            yield symbol, children


def _forests(core, body, budget):
    if not body:
        yield ()
        return
    for tree in _trees(core, body[0], budget - len(body) + 1):
        for rest in _forests(core, body[1:], budget - len(_yield(tree))):
            yield (tree,) + rest


def _yield(tree):
    symbol, children = tree
    if children is None:
        return (symbol,)
    return tuple(x for child in children for x in _yield(child))


def _controlled_levels(tree):
    """The level words of a tree, leaving out the last level."""
    levels = []
    level = [tree]
    while any(children is not None for _, children in level):
        levels.append(tuple(symbol for symbol, _ in level))
        level = [child for _, children in level if children is not None for child in children]
    return levels


def _naive_words(grammar, max_len):
    core, control = grammar.core, grammar.control
    return {
        _yield(tree) for tree in _trees(core, core.start, max_len)
        if all(control.accepts(level) for level in _controlled_levels(tree))
    }


def _small_core(rng):
    vars = ['S', 'A'][:rng.randint(1, 2)]
    terminals = ['a', 'b']
    rules = []
    for var in vars:
        for _ in range(rng.randint(1, 3)):
            if rng.random() < 0.35:
                rules.append((var, [rng.choice(terminals)]))
            else:
                rules.append((var, [rng.choice(vars + terminals) for _ in range(rng.randint(2, 3))]))
    if rng.random() < 0.2 and not any('S' in body for _, body in rules):
        rules.append(('S', []))
    return Cfg(vars, terminals, rules, 'S')


def _small_control(rng, symbols):
    if rng.random() < 0.2:
        return Dfa.universal(symbols)
    n = rng.randint(1, 3)
    delta = [[rng.randrange(n) for _ in symbols] for _ in range(n)]
    finals = {q for q in range(n) if rng.random() < 0.5}
    if rng.random() < 0.6:
        finals.add(delta[0][symbols.index('S')])
    return Dfa(symbols, delta, 0, finals)


def test_enumeration_matches_naive_tree_enumeration(rng):
    for _ in range(100):
        core = _small_core(rng)
        grammar = TcGrammar(core, _small_control(rng, core.symbols))
        max_len = rng.randint(1, 6)
        assert set(tc_enumerate(grammar, max_len).words) == _naive_words(grammar, max_len), grammar.core.rules


def test_naive_enumeration_on_the_examples(g1, g2):
    assert _naive_words(g1, 8) == {('a',), ('a',) * 2, ('a',) * 4, ('a',) * 8}
    assert _naive_words(g2, 9) == {_abc(2), _abc(3)}


def test_enumeration_is_deterministic(g2, rng):
    assert tc_enumerate(g2, 15) == tc_enumerate(g2, 15)
    for _ in range(20):
        core = _small_core(rng)
        grammar = TcGrammar(core, _small_control(rng, core.symbols))
        assert tc_enumerate(grammar, 6) == tc_enumerate(grammar, 6)
