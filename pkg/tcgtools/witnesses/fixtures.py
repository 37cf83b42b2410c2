"""Example grammars used by the hierarchy checks."""
from ..core.automata import Dfa
from ..core.grammars import RightLinearGrammar, Rule
from ..core.regex import Literal, RegularExpression, Star
from ..transforms.kuroda import MonotoneGrammar
from ..treectrl.grammar import Cfg, TcGrammar


def example_g1():
    """S -> SS | a under the control {S}*; the language is {a^(2^n) : n >= 0}."""
    core = Cfg(['S'], ['a'], [('S', ['S', 'S']), ('S', ['a'])], 'S')
    control = RegularExpression(Star(Literal('S')), core.symbols).to_dfa()
    return TcGrammar(core, control)


def example_g1_control_grammar():
    """The two-production grammar of {S}*."""
    return RightLinearGrammar(["S'"], ['S', 'a'], [Rule("S'", ['S'], "S'"), Rule("S'", [])], "S'")


def example_g2():
    """The grammar of {a^n b^n c^n : n >= 2} under the finite control {S, aAbBcC}."""
    core = Cfg(['S', 'A', 'B', 'C'], ['a', 'b', 'c'], [
        ('S', 'aAbBcC'),
        ('A', 'aA'), ('B', 'bB'), ('C', 'cC'),
        ('A', 'a'), ('B', 'b'), ('C', 'c'),
    ], 'S')
    control = Dfa.from_words(core.symbols, [('S',), tuple('aAbBcC')])
    return TcGrammar(core, control)


def example_g2_control_grammar():
    """The two-production grammar of {S, aAbBcC}."""
    symbols = ['S', 'A', 'B', 'C', 'a', 'b', 'c']
    return RightLinearGrammar(["S'"], symbols, [Rule("S'", ['S']), Rule("S'", 'aAbBcC')], "S'")


def abc_monotone_grammar():
    """A monotone grammar of {a^n b^n c^n : n >= 1}."""
    rules = [
        ('S', 'aSBC'), ('S', 'aBC'),
        ('CB', 'BC'),
        ('aB', 'ab'), ('bB', 'bb'), ('bC', 'bc'), ('cC', 'cc'),
    ]
    return MonotoneGrammar(['S', 'B', 'C'], ['a', 'b', 'c'], [(tuple(l), tuple(r)) for l, r in rules], 'S')


def random_core(rng, n_vars=2, terminals=('a', 'b'), max_body=3):
    """A random non-erasing core with every nonterminal having at least one rule."""
    vars = ['S', 'A', 'B', 'C'][:n_vars]
    symbols = vars + list(terminals)
    rules = []
    for var in vars:
        for _ in range(rng.randint(1, 3)):
            rules.append((var, [rng.choice(symbols) for _ in range(rng.randint(1, max_body))]))
    return Cfg(vars, terminals, rules, 'S')


def random_control_word(rng, core):
    """A control word for a one-production control: often S, sometimes another word or none."""
    roll = rng.random()
    if roll < 0.5:
        return (core.start,)
    if roll < 0.8:
        return tuple(rng.choice(core.symbols) for _ in range(rng.randint(1, 3)))
    return None
