"""Inclusion and incomparability edges of the two hierarchies.

The subregular hierarchy relates families of regular languages; the
tree-controlled hierarchy relates the language families generated with
controls from those families. Edges proved in the literature are listed
with status 'cited'. The remaining edges are checked here, through witness
reports and through constructions run at bounded size.
"""
import collections
import logging
import random

from ..core.automata import Dfa, equivalent, included
from ..core.regex import RegularExpression
from ..subregular.search import DEFAULT_SEARCH_CAP
from ..subregular.slt import SltDescription, five_state_dfa, is_slt_k, slt1_to_rlg, slt_to_dfa
from ..transforms.construction import (
    control_coherent, kuroda_to_tc, rl1p_semantics, star_of_finite_union_free,
)
from ..transforms.kuroda import enumerate_monotone, monotone_to_kuroda
from ..treectrl.derivation import tc_certify, tc_enumerate
from ..treectrl.grammar import Cfg, TcGrammar
from ..utils import render_template
from . import fixtures
from .catalog import build_witness
from .verify import verify_all


LOGGER = logging.getLogger(__name__)

SUBREGULAR = 'subregular'
TREE_CONTROLLED = 'tree-controlled'

DEFAULT_BOUNDS = {'max_n': 3, 'tc_max_len': 6, 'samples': 25, 'seed': 0}


EdgeBase = collections.namedtuple(
    typename='EdgeBase', field_names=['figure', 'source', 'target', 'relation', 'witnesses', 'checks'],
)


class Edge(EdgeBase):
    """A relation between two families.

    ``relation`` is 'proper' (proper inclusion), 'inclusion' (inclusion not
    known to be proper), 'equal' or 'incomparable'. ``witnesses`` lists the
    catalog ids whose reports must be green and ``checks`` the construction
    checks that must pass; an edge with neither is cited.
    """
    __slots__ = ()

    @property
    def cited(self):
        return not self.witnesses and not self.checks

    def __str__(self):
        symbol = {'proper': '⊂', 'inclusion': '⊆', 'equal': '=', 'incomparable': '∥'}[self.relation]
        return '{0} {1} {2}'.format(self.source, symbol, self.target)


def _cited(figure, pairs, relation='proper'):
    return [Edge(figure, source, target, relation, (), ()) for source, target in pairs]


SUBREGULAR_EDGES = _cited(SUBREGULAR, [
    ('FIN', 'NIL'), ('MON', 'REG_1^Z'), ('REG_1^Z', 'NIL'), ('REG_1^Z', 'SUF'), ('REG_1^Z', 'COMM'),
    ('REG_1^Z', 'UF'), ('REG_1^Z', 'REG_2^Z'), ('REG_1^Z', 'SLT_1'), ('RL_1^P', 'FIN'), ('RL_1^P', 'UF'),
    ('RL_1^V', 'RL_2^V'), ('RL_2^V', 'RL_n^V'), ('RL_n^V', 'REG'), ('REG_2^Z', 'RL_2^V'),
    ('REG_2^Z', 'REG_3^Z'), ('REG_4^Z', 'REG_5^Z'), ('REG_n^Z', 'REG'), ('RL_1^P', 'RL_2^P'),
    ('RL_2^P', 'RL_3^P'), ('RL_2^P', 'RL_1^V'), ('RL_3^P', 'RL_4^P'), ('RL_4^P', 'RL_n^P'),
    ('RL_4^P', 'RL_2^V'), ('RL_n^P', 'REG'), ('NIL', 'DEF'), ('NIL', 'RL_1^V'), ('COMB', 'DEF'),
    ('COMB', 'RL_1^V'), ('COMB', 'REG_2^Z'), ('COMB', 'SLT_1'), ('SLT_1', 'SLT_2'), ('SLT_1', 'ORD'),
    ('SLT_2', 'SLT_k'), ('SLT_k', 'SLT'), ('SLT', 'NC'), ('ORD', 'NC'), ('DEF', 'ORD'), ('DEF', 'SLT'),
    ('DEF', 'RL_2^V'), ('NC', 'PS'), ('PS', 'REG'), ('SUF', 'PS'), ('COMM', 'CIRC'), ('CIRC', 'REG'),
    ('UF', 'REG'),
]) + [
    Edge(SUBREGULAR, 'SLT_1', 'REG_5^Z', 'proper', (('l-l1', None),), ('five_state',)),
    Edge(SUBREGULAR, 'SLT_1', 'RL_2^V', 'proper', (('l-l6', None),), ('two_variables',)),
    Edge(SUBREGULAR, 'SLT_1', 'REG_i^Z (i = 2, 3, 4)', 'incomparable', (('l-l1', None), ('l-l2', None)), ()),
    Edge(SUBREGULAR, 'SLT_k (k >= 2), SLT', 'REG_n^Z (n >= 2)', 'incomparable',
         (('l-l1', None), ('l-l3', 'n')), ()),
    Edge(SUBREGULAR, 'SLT_k (k >= 1)', 'RL_n^P (n >= 1)', 'incomparable', (('l-l4', 'n'), ('l-l5', 'n')), ()),
    Edge(SUBREGULAR, 'SLT_1', 'RL_1^V', 'incomparable', (('l-l6', None), ('l-l7', None)), ()),
    Edge(SUBREGULAR, 'SLT_k (k >= 2), SLT', 'RL_n^V (n >= 1)', 'incomparable',
         (('l-l8', None), ('l-l9', 'n')), ()),
]

TREE_CONTROLLED_EDGES = _cited(TREE_CONTROLLED, [
    ('CF', 'cTC(REG_1^Z)'), ('cTC(REG_1^Z)', 'cTC(COMB)'), ('FIN', 'CF'), ('cTC(FIN)', 'cTC(NIL)'),
    ('cTC(REG_1^Z)', 'cTC(NIL)'), ('cTC(FIN)', 'cTC(MON_2)'), ('cTC(REG_1^Z)', 'cTC(MON_2)'),
    ('cTC(MON_2)', 'cTC(COMM)'), ('cTC(MON_2)', 'cTC(REG_4^Z)'), ('cTC(COMM)', 'CS'),
]) + _cited(TREE_CONTROLLED, [
    ('cTC(NIL)', 'cTC(DEF)'), ('cTC(COMB)', 'cTC(DEF)'), ('cTC(COMB)', 'cTC(SLT_1)'),
    ('cTC(COMB)', 'cTC(REG_2^Z)'), ('cTC(REG_2^Z)', 'cTC(REG_4^Z)'), ('cTC(DEF)', 'CS'),
    ('cTC(SLT_1)', 'CS'), ('cTC(REG_4^Z)', 'CS'), ('cTC(RL_2^P)', 'cTC(RL_n^P)'), ('cTC(RL_n^P)', 'CS'),
], relation='inclusion') + _cited(TREE_CONTROLLED, [
    ('cTC(REG)', 'CS'), ('cTC(COMM)', 'MAT'), ('cTC(FIN)', 'MAT_fin'), ('cTC(MON_1)', 'E0L'),
    ('cTC(MON_2)', 'ET0L'), ('cTC(SUF)', 'CS'), ('cTC(ORD)', 'CS'), ('cTC(REG_5^Z)', 'CS'),
], relation='equal') + [
    Edge(TREE_CONTROLLED, 'cTC(RL_1^P)', 'FIN', 'equal', (), ('rl1p_collapse', 'finite_languages')),
    Edge(TREE_CONTROLLED, 'cTC(RL_1^P)', 'cTC(RL_2^P)', 'proper', (), ('rl1p_collapse', 'examples')),
    Edge(TREE_CONTROLLED, 'cTC(SLT_2)', 'CS', 'equal', (), ('kuroda_pipeline',)),
    Edge(TREE_CONTROLLED, 'cTC(SLT)', 'CS', 'equal', (), ('kuroda_pipeline',)),
    Edge(TREE_CONTROLLED, 'cTC(RL_1^V)', 'CS', 'equal', (), ('kuroda_pipeline', 'one_variable_control')),
    Edge(TREE_CONTROLLED, 'cTC(UF)', 'CS', 'equal', (), ('kuroda_pipeline', 'union_free_control')),
    Edge(TREE_CONTROLLED, 'cTC(X)', 'cTC(Y) for X ⊆ Y', 'inclusion', (), ('monotone_control',)),
]


def _random_slt1(rng):
    alphabet = ('a', 'b', 'c', 'd')[:rng.randint(1, 4)]

    def subset():
        return [(a,) for a in alphabet if rng.random() < 0.5]

    return SltDescription(1, alphabet, B=subset(), I=subset(), E=subset(), F=[()] if rng.random() < 0.5 else [])


def check_five_state(bounds):
    """The five-state automaton accepts the same language as the window automaton."""
    rng = random.Random(bounds['seed'])
    for _ in range(bounds['samples']):
        desc = _random_slt1(rng)
        dfa = five_state_dfa(desc)
        if dfa.n_states != 5 or not equivalent(dfa, slt_to_dfa(desc)):
            return False, 'five-state automaton differs for {0!r}'.format(desc)
    return True, '{0} random width-1 descriptions'.format(bounds['samples'])


def check_two_variables(bounds):
    """The two-variable grammar of a width-1 description generates its language."""
    rng = random.Random(bounds['seed'])
    for _ in range(bounds['samples']):
        desc = _random_slt1(rng)
        grammar = slt1_to_rlg(desc)
        if grammar.n_vars != 2 or not equivalent(grammar.to_dfa(), slt_to_dfa(desc)):
            return False, 'two-variable grammar differs for {0!r}'.format(desc)
    return True, '{0} random width-1 descriptions'.format(bounds['samples'])


def check_rl1p_collapse(bounds):
    """With a control of at most one word the language is the set of terminal start bodies."""
    rng = random.Random(bounds['seed'])
    for _ in range(bounds['samples']):
        core = fixtures.random_core(rng)
        word = fixtures.random_control_word(rng, core)
        words = [] if word is None else [word]
        control = Dfa.from_words(core.symbols, words)
        found = set(tc_enumerate(TcGrammar(core, control), max_len=3).words)
        if found != rl1p_semantics(core, word):
            return False, 'enumeration differs for control {0!r}'.format(word)
    return True, '{0} random cores with one-word controls'.format(bounds['samples'])


def check_finite_languages(bounds):
    """Every finite language is generated with the control {S}."""
    rng = random.Random(bounds['seed'])
    for _ in range(bounds['samples']):
        words = {tuple(rng.choice('ab') for _ in range(rng.randint(1, 3))) for _ in range(rng.randint(1, 4))}
        core = Cfg(['S'], ['a', 'b'], [('S', word) for word in words], 'S')
        control = Dfa.from_words(core.symbols, [('S',)])
        if set(tc_enumerate(TcGrammar(core, control), max_len=3).words) != words:
            return False, 'finite language {0!r} not reproduced'.format(sorted(words))
    return True, '{0} random finite languages'.format(bounds['samples'])


def check_examples(bounds):
    """Both examples use two-production controls and generate infinite languages."""
    g1, g2 = fixtures.example_g1(), fixtures.example_g2()
    controls = [(g1, fixtures.example_g1_control_grammar()), (g2, fixtures.example_g2_control_grammar())]
    for grammar, control_grammar in controls:
        if control_grammar.n_prods != 2 or not equivalent(control_grammar.to_dfa(), grammar.control):
            return False, 'control grammar mismatch'
    powers = [('a',) * 2 ** i for i in range(7)]
    result = tc_enumerate(g1, 64)
    if result.words != powers:
        return False, 'first example gives {0} words up to length 64'.format(len(result.words))
    abc = [tuple('a' * n + 'b' * n + 'c' * n) for n in range(2, 11)]
    result = tc_enumerate(g2, 30)
    if result.words != abc:
        return False, 'second example gives {0} words up to length 30'.format(len(result.words))
    if not all(tc_certify(g2, result.traces[word], word) for word in result.words):
        return False, 'a trace of the second example does not replay'
    return True, 'seven powers of two up to 64, a^n b^n c^n for 2 <= n <= 10'


def _abc_construction():
    source = fixtures.abc_monotone_grammar()
    return source, kuroda_to_tc(monotone_to_kuroda(source))


def check_kuroda_pipeline(bounds):
    """The construction for a^n b^n c^n generates the source language up to the length bound."""
    length = bounds['tc_max_len']
    source, construction = _abc_construction()
    expected = enumerate_monotone(source, length)
    found = tc_enumerate(construction.tc, length).words
    if found != expected:
        return False, 'construction gives {0} words, the source {1}'.format(len(found), len(expected))
    verdict = is_slt_k(construction.tc.control, 2)
    if not verdict or verdict.description != construction.control_desc:
        return False, 'the control is not width-2 with the expected description'
    return True, '{0} words up to length {1}'.format(len(found), length)


def check_one_variable_control(bounds):
    _, construction = _abc_construction()
    if not control_coherent(construction):
        return False, 'control representations disagree'
    return True, 'DFA, width-2 description and one-variable grammar agree'


def check_union_free_control(bounds):
    _, construction = _abc_construction()
    tree = star_of_finite_union_free(construction.control_words)
    dfa = RegularExpression(tree, construction.tc.core.symbols).to_dfa()
    if not tree.is_union_free() or not equivalent(dfa, construction.tc.control):
        return False, 'union-free control differs'
    return True, 'union-free expression of the control agrees'


def check_monotone_control(bounds):
    """A larger control never removes words."""
    g2 = fixtures.example_g2()
    wider = RegularExpression.from_text('S | (a A b B c C)*', g2.core.symbols).to_dfa()
    if not included(g2.control, wider):
        return False, 'the wider control does not contain the narrow one'
    narrow = set(tc_enumerate(g2, 18).words)
    wide = set(tc_enumerate(TcGrammar(g2.core, wider), 18).words)
    if not narrow <= wide:
        return False, 'a word was lost under the wider control'
    return True, '{0} words within {1} up to length 18'.format(len(narrow), len(wide))


CHECKS = collections.OrderedDict([
    ('five_state', check_five_state),
    ('two_variables', check_two_variables),
    ('rl1p_collapse', check_rl1p_collapse),
    ('finite_languages', check_finite_languages),
    ('examples', check_examples),
    ('kuroda_pipeline', check_kuroda_pipeline),
    ('one_variable_control', check_one_variable_control),
    ('union_free_control', check_union_free_control),
    ('monotone_control', check_monotone_control),
])


EdgeResultBase = collections.namedtuple(typename='EdgeResultBase', field_names=['edge', 'status', 'details'])


class EdgeResult(EdgeResultBase):
    """An edge with status 'verified', 'failed' or 'cited'."""
    __slots__ = ()


class HierarchyReport(object):
    """Edge results of both hierarchies with the witness reports they rely on."""

    def __init__(self, results, witness_reports, bounds):
        self.results = list(results)
        self.witness_reports = list(witness_reports)
        self.bounds = dict(bounds)

    def figure(self, name):
        return [result for result in self.results if result.edge.figure == name]

    @property
    def green(self):
        return all(result.status != 'failed' for result in self.results)

    def render(self):
        return render_template('hierarchy.txt', report=self, figures=(SUBREGULAR, TREE_CONTROLLED))

    def to_document(self):
        return {
            'green': self.green,
            'bounds': self.bounds,
            'edges': [
                {
                    'figure': result.edge.figure,
                    'edge': str(result.edge),
                    'relation': result.edge.relation,
                    'status': result.status,
                    'details': list(result.details),
                }
                for result in self.results
            ],
        }


def _witness_cases(edges, max_n):
    keys = []
    for edge in edges:
        for id, parameter in edge.witnesses:
            if parameter is None:
                keys.append((id, None))
            else:
                smallest = 2 if id == 'l-l3' else 1
                keys.extend((id, n) for n in range(smallest, max_n + 1))
    return list(collections.OrderedDict.fromkeys(keys))


def hierarchy_report(**kwargs):
    """Check the locally provable edges of both hierarchies.

    Parameters
    ----------
    max_n : int, keyword only, optional
        Parameterized witnesses are checked for every n up to this value.
        The default is 3.
    tc_max_len : int, keyword only, optional
        The length bound of the Kuroda pipeline check. The default is 6.
    samples : int, keyword only, optional
        The number of random instances per randomized check. The default is 25.
    seed : int, keyword only, optional
        The seed of the randomized checks. The default is 0.
    workers : int, keyword only, optional
        Processes used for the witness reports. The default is 1.
    search_cap : int, keyword only, optional
        The cap of every grammar search.

    Returns
    -------
    HierarchyReport
    """
    bounds = dict(DEFAULT_BOUNDS)
    for name in DEFAULT_BOUNDS:
        if name in kwargs:
            bounds[name] = kwargs.pop(name)
    workers = kwargs.pop('workers', 1)
    search_cap = kwargs.pop('search_cap', DEFAULT_SEARCH_CAP)
    if kwargs:
        raise TypeError('Unexpected keyword arguments: {!r}'.format(kwargs))
    edges = SUBREGULAR_EDGES + TREE_CONTROLLED_EDGES
    keys = _witness_cases(edges, bounds['max_n'])
    reports = verify_all([build_witness(id, n) for id, n in keys], workers=workers, search_cap=search_cap)
    by_key = dict(zip(keys, reports))
    checks = {}
    results = []
    for edge in edges:
        if edge.cited:
            results.append(EdgeResult(edge, 'cited', ()))
            continue
        details = []
        ok = True
        for key in _witness_cases([edge], bounds['max_n']):
            report = by_key[key]
            details.append('{0}: {1}'.format(report.name, 'green' if report.green else 'red'))
            ok = ok and report.green
        for name in edge.checks:
            if name not in checks:
                LOGGER.info('Running the %s check.', name)
                checks[name] = CHECKS[name](bounds)
            passed, detail = checks[name]
            details.append('{0}: {1}'.format(name, detail))
            ok = ok and passed
        results.append(EdgeResult(edge, 'verified' if ok else 'failed', tuple(details)))
    return HierarchyReport(results, reports, bounds)
