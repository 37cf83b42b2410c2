"""Tree-controlled grammars with simple control languages.

``kuroda_to_tc`` simulates a grammar in Kuroda normal form by a
tree-controlled grammar whose control language is
``(N_cf ∪ N_12)*``. Terminating rules A -> a become A -> hat_a and
hat_a -> a, so terminals only appear on the last level. Every context rule
``p: AB -> CD`` becomes the marker rules A -> M_p_1, B -> M_p_2,
M_p_1 -> C and M_p_2 -> D; the control only admits the markers as the
adjacent pair M_p_1 M_p_2. Identity rules A -> A and hat_a -> hat_a let a
symbol wait while its neighbours are rewritten.
"""
import collections
import logging

from ..core.automata import DEFAULT_MAX_STATES, equivalent
from ..core.grammars import RightLinearGrammar, Rule
from ..core.regex import Empty, RegularExpression, Star, concat_all, union_all, word_regex
from ..subregular.slt import SltDescription
from ..treectrl.grammar import Cfg, TcGrammar
from ..utils import fresh_name
from .kuroda import NotKurodaError, kuroda_shape


LOGGER = logging.getLogger(__name__)


PartsBase = collections.namedtuple(
    typename='PartsBase', field_names=['n_cf', 'n1', 'n2', 'n12', 'p_cf', 'p_t', 'p_d', 'p_cs'],
)


class ConstructionParts(PartsBase):
    """The nonterminal sets and rule groups of a construction.

    ``n_cf``, ``n1`` and ``n2`` are tuples of symbols and ``n12`` holds the
    two-letter marker words. The rule groups are tuples of ``(lhs, body)``
    pairs.
    """
    __slots__ = ()

    @property
    def nonterminals(self):
        return self.n_cf + self.n1 + self.n2


TcConstructionBase = collections.namedtuple(
    typename='TcConstructionBase', field_names=['tc', 'control_desc', 'parts', 'hat_map', 'marker_map'],
)


class TcConstruction(TcConstructionBase):
    """The result of :func:`kuroda_to_tc`.

    Attributes
    ----------
    tc : TcGrammar
        The tree-controlled grammar.
    control_desc : SltDescription
        The control language as a width-2 description.
    parts : ConstructionParts
        The nonterminal sets and rule groups.
    hat_map : OrderedDict
        Terminal to placeholder nonterminal.
    marker_map : OrderedDict
        Rule label to the pair of marker nonterminals.
    """
    __slots__ = ()

    @property
    def control_words(self):
        """The one- and two-letter words whose star is the control language."""
        return tuple((x,) for x in self.parts.n_cf) + self.parts.n12


def _control_description(alphabet, parts):
    n_cf, n1, n2 = parts.n_cf, parts.n1, parts.n2
    cf_cf = [(x, y) for x in n_cf for y in n_cf]
    cf_1 = [(x, y) for x in n_cf for y in n1]
    two_cf = [(x, y) for x in n2 for y in n_cf]
    two_1 = [(x, y) for x in n2 for y in n1]
    return SltDescription(
        2,
        alphabet,
        B=cf_cf + cf_1 + list(parts.n12),
        I=cf_cf + cf_1 + list(parts.n12) + two_cf + two_1,
        E=cf_cf + list(parts.n12) + two_cf,
        F=[(x,) for x in n_cf] + [()],
    )


def kuroda_to_tc(grammar, max_states=DEFAULT_MAX_STATES):
    """Build the tree-controlled grammar with width-2 control of a Kuroda grammar.

    Context rules are labelled 1, 2, ... in sorted order of ``(lhs, rhs)``.
    When the grammar contains start -> λ the rule is kept and the identity
    rule of the start symbol is left out, so the start symbol occurs on no
    right-hand side.

    Parameters
    ----------
    grammar : KurodaGrammar
        The source grammar.

    Returns
    -------
    TcConstruction

    Raises
    ------
    NotKurodaError
        If a rule is not in Kuroda form.
    """
    for lhs, rhs in grammar.rules:
        if kuroda_shape(grammar, lhs, rhs) is None:
            raise NotKurodaError('The rule {0} -> {1} is not in Kuroda form.'.format(
                ' '.join(lhs), ' '.join(rhs) or 'λ'))
    taken = set(grammar.vars) | set(grammar.terminals)

    def fresh(base):
        name = fresh_name(base, taken)
        taken.add(name)
        return name

    hat_map = collections.OrderedDict((a, fresh('hat_' + a)) for a in grammar.terminals)
    context = sorted((lhs, rhs) for lhs, rhs in grammar.rules if len(lhs) == 2)
    marker_map = collections.OrderedDict(
        (p, (fresh('M_{0}_1'.format(p)), fresh('M_{0}_2'.format(p)))) for p in range(1, len(context) + 1)
    )

    p_cf, p_t, p_d, p_cs = [], [], [], []
    empty_rule = grammar.has_empty_rule
    for lhs, rhs in grammar.rules:
        shape = kuroda_shape(grammar, lhs, rhs)
        if shape in ('binary', 'chain') and rhs != lhs:
            p_cf.append((lhs[0], rhs))
        elif shape == 'terminal':
            p_t.append((lhs[0], (hat_map[rhs[0]],)))
    p_t.extend((hat, (a,)) for a, hat in hat_map.items())
    p_d.extend((var, (var,)) for var in grammar.vars if not (empty_rule and var == grammar.start))
    p_d.extend((hat, (hat,)) for hat in hat_map.values())
    for (p, (first, second)), ((a, b), (c, d)) in zip(marker_map.items(), context):
        p_cs.extend([(a, (first,)), (b, (second,)), (first, (c,)), (second, (d,))])

    n_cf = grammar.vars + tuple(hat_map.values())
    n1 = tuple(first for first, _ in marker_map.values())
    n2 = tuple(second for _, second in marker_map.values())
    parts = ConstructionParts(
        n_cf, n1, n2, tuple(marker_map.values()),
        tuple(p_cf), tuple(p_t), tuple(p_d), tuple(p_cs),
    )
    rules = list(p_cf) + list(p_t) + list(p_d) + list(p_cs)
    if empty_rule:
        rules.append((grammar.start, ()))
    core = Cfg(parts.nonterminals, grammar.terminals, rules, grammar.start)
    words = tuple((x,) for x in n_cf) + parts.n12
    control = RegularExpression(_star_of_words(words), core.symbols).to_dfa(max_states)
    control_desc = _control_description(core.symbols, parts)
    LOGGER.info('TC construction: %d nonterminals, %d rules, %d context rules.',
                len(core.vars), core.n_rules, len(context))
    return TcConstruction(TcGrammar(core, control), control_desc, parts, hat_map, marker_map)


def _star_of_words(words):
    return Star(union_all(word_regex(word) for word in words))


def one_var_star_grammar(words, alphabet):
    """The one-nonterminal right-linear grammar of the star of a finite set.

    The rules are S' -> x S' and S' -> x for every word x, plus S' -> λ so
    that the grammar also generates the empty word.
    """
    start = fresh_name("S'", set(alphabet))
    rules = [Rule(start, word, start) for word in words]
    rules.extend(Rule(start, word) for word in words)
    rules.append(Rule(start, ()))
    return RightLinearGrammar([start], alphabet, rules, start)


def control_rlg_one_var(construction):
    """Return the one-nonterminal right-linear grammar of a construction's control."""
    return one_var_star_grammar(construction.control_words, construction.tc.core.symbols)


def control_coherent(construction):
    """Check that the control DFA, its width-2 description and its grammar agree."""
    control = construction.tc.control
    return (equivalent(construction.control_desc.to_dfa(), control)
            and equivalent(control_rlg_one_var(construction).to_dfa(), control))


def star_of_finite_union_free(words):
    """Return a union-free expression of the star of a finite set of words.

    The star of ``{w1, ..., wn}`` equals ``(w1* w2* ... wn*)*``, with the
    words in sorted order. The empty set gives the star of the empty
    language, whose language is {λ}.
    """
    words = sorted(set(tuple(word) for word in words))
    if not words:
        return Star(Empty())
    return Star(concat_all(Star(word_regex(word)) for word in words))


def rl1p_semantics(core, control_word):
    """The language of a tree-controlled grammar whose control holds at most one word.

    The first level is always the start symbol, so the control must be
    exactly that one-letter word; the language is then the set of terminal
    bodies of the start symbol. Any other control gives the empty language.

    Parameters
    ----------
    core : Cfg
        The core grammar.
    control_word : sequence of str or None
        The single control word, or None for the empty control language.

    Returns
    -------
    frozenset of tuple
    """
    if control_word is None or tuple(control_word) != (core.start,):
        return frozenset()
    return frozenset(
        body for body in core.rules[core.start]
        if all(not core.is_nonterminal(x) for x in body)
    )
