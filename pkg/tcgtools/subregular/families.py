import collections
import itertools
import logging

from ..core.automata import (
    Dfa, complement, enumerate_dfa, equivalent, included, is_suffix_closed, suffix_language,
)
from ..core.grammars import dfa_to_rlg
from ..core.regex import Literal, RegularExpression, Star, concat_all, union_all, word_regex
from ..utils import render_template
from .slt import is_slt_upto, slt1_to_rlg, slt_to_dfa


LOGGER = logging.getLogger(__name__)

FAMILIES = (
    'finite', 'nilpotent', 'monoidal', 'mon_n', 'combinational', 'definite', 'suffix_closed', 'slt',
)

DEFAULT_BOUNDS = {'k_max': 4, 'definite_k_max': 8, 'mon_n_max': 3}

# Sub-alphabet enumeration for MON_n is skipped above this alphabet size.
MON_ALPHABET_LIMIT = 12

# Candidate enumeration for definiteness stops above this many words.
DEFINITE_WORD_CAP = 50000


FamilyVerdictBase = collections.namedtuple(
    typename='FamilyVerdictBase', field_names=['family', 'holds', 'parameter', 'bound', 'certificate'],
)


class FamilyVerdict(FamilyVerdictBase):
    """A family membership verdict.

    ``holds`` is True, False, or None when the decision was not attempted.
    A negative verdict with a ``bound`` only covers parameters up to that
    bound. Positive verdicts carry a certificate that regenerates the
    language.
    """
    __slots__ = ()

    @property
    def exact(self):
        return self.bound is None

    def describe(self):
        if self.holds is None:
            return 'undecided (bound {0})'.format(self.bound)
        if self.holds:
            return 'yes' if self.parameter is None else 'yes ({0})'.format(self.parameter)
        if self.bound is None:
            return 'no'
        return 'no (up to {0})'.format(self.bound)


def star_of(alphabet, symbols):
    """The expression of A* for a sub-alphabet A (λ for the empty one)."""
    return Star(union_all(Literal(symbol) for symbol in symbols))


def mon_dfa(alphabet, subalphabets):
    return RegularExpression(union_all(star_of(alphabet, sub) for sub in subalphabets), alphabet).to_dfa()


def combinational_dfa(alphabet, letters):
    tree = concat_all([star_of(alphabet, alphabet), union_all(Literal(a) for a in letters)])
    return RegularExpression(tree, alphabet).to_dfa()


def definite_dfa(alphabet, A, B):
    tails = concat_all([star_of(alphabet, alphabet), union_all(word_regex(word) for word in B)])
    tree = union_all([word_regex(word) for word in A] + [tails])
    return RegularExpression(tree, alphabet).to_dfa()


def _star_included(d, symbols):
    columns = [d.index[symbol] for symbol in symbols]
    seen = {d.start}
    stack = [d.start]
    while stack:
        state = stack.pop()
        if state not in d.finals:
            return False
        for column in columns:
            target = d.delta[state][column]
            if target not in seen:
                seen.add(target)
                stack.append(target)
    return True


def _decide_finite(d):
    if d.is_finite():
        return FamilyVerdict('finite', True, None, None, tuple(enumerate_dfa(d, d.n_states)))
    return FamilyVerdict('finite', False, None, None, None)


def _decide_nilpotent(d, finite):
    if finite.holds:
        return FamilyVerdict('nilpotent', True, 'finite', None, ('finite', finite.certificate))
    co = complement(d)
    if co.is_finite():
        return FamilyVerdict('nilpotent', True, 'cofinite', None,
                             ('cofinite', tuple(enumerate_dfa(co, co.n_states))))
    return FamilyVerdict('nilpotent', False, None, None, None)


def _decide_mon(d, mon_n_max):
    if len(d.alphabet) > MON_ALPHABET_LIMIT:
        LOGGER.warning('Skipping MON_n: the alphabet has more than %d symbols.', MON_ALPHABET_LIMIT)
        return FamilyVerdict('mon_n', None, None, mon_n_max, None)
    feasible = [
        sub for size in range(len(d.alphabet) + 1)
        for sub in itertools.combinations(d.alphabet, size)
        if _star_included(d, sub)
    ]
    maximal = [sub for sub in feasible if not any(set(sub) < set(other) for other in feasible)]
    for n in range(1, mon_n_max + 1):
        for choice in itertools.combinations(maximal, n):
            if equivalent(mon_dfa(d.alphabet, choice), d):
                return FamilyVerdict('mon_n', True, n, None, choice)
    return FamilyVerdict('mon_n', False, None, mon_n_max, None)


def _decide_combinational(d):
    letters = tuple(a for a in d.alphabet if d.accepts((a,)))
    if equivalent(combinational_dfa(d.alphabet, letters), d):
        return FamilyVerdict('combinational', True, None, None, letters)
    return FamilyVerdict('combinational', False, None, None, None)


def _decide_definite(d, definite_k_max):
    for k in range(1, definite_k_max + 1):
        if len(d.alphabet) ** k > DEFINITE_WORD_CAP:
            LOGGER.warning('Definiteness decided only up to k=%d (word cap).', k - 1)
            return FamilyVerdict('definite', False, None, k - 1, None)
        words = enumerate_dfa(d, k)
        A = tuple(word for word in words if len(word) < k)
        B = tuple(word for word in words if len(word) == k)
        if equivalent(definite_dfa(d.alphabet, A, B), d):
            return FamilyVerdict('definite', True, k, None, (A, B))
    return FamilyVerdict('definite', False, None, definite_k_max, None)


def _decide_suffix_closed(d):
    if is_suffix_closed(d):
        return FamilyVerdict('suffix_closed', True, None, None, suffix_language(d))
    return FamilyVerdict('suffix_closed', False, None, None, None)


def _decide_slt(d, k_max):
    verdict = is_slt_upto(d, k_max)
    if verdict:
        return FamilyVerdict('slt', True, verdict.k, None, verdict.description)
    return FamilyVerdict('slt', False, None, k_max, verdict.counterexample)


class ClassificationReport(object):
    """Family verdicts and complexity measures of one regular language.

    Attributes
    ----------
    dfa : Dfa
        The minimal DFA that was classified.
    verdicts : OrderedDict
        Family name to :class:`FamilyVerdict`, in the order of FAMILIES.
    state_complexity : int
        State(L), sink included.
    var_rl_upper, prod_rl_upper : int
        Upper bounds of Var_RL(L) and Prod_RL(L).
    search_certificates : dict
        The grammars realizing the two upper bounds, keyed 'var_rl' and 'prod_rl'.
    bounds : dict
        The bounds used for the bounded deciders.
    """
    def __init__(self, dfa, verdicts, grammars, bounds):
        self.dfa = dfa
        self.verdicts = collections.OrderedDict((v.family, v) for v in verdicts)
        self.state_complexity = dfa.n_states
        var_grammar = min(grammars, key=lambda g: (g.n_vars, g.n_prods))
        prod_grammar = min(grammars, key=lambda g: (g.n_prods, g.n_vars))
        self.var_rl_upper = var_grammar.n_vars
        self.prod_rl_upper = prod_grammar.n_prods
        self.search_certificates = {'var_rl': var_grammar, 'prod_rl': prod_grammar}
        self.bounds = dict(bounds)

    def __getitem__(self, family):
        return self.verdicts[family]

    def __repr__(self):
        return 'ClassificationReport({0})'.format(
            ', '.join('{0}={1}'.format(name, v.describe()) for name, v in self.verdicts.items())
        )

    def render(self):
        return render_template('classification.txt', report=self)

    def to_document(self):
        """The verdicts and measures as a report document body; certificates are left out."""
        return {
            'alphabet': list(self.dfa.alphabet),
            'state_complexity': self.state_complexity,
            'var_rl_upper': self.var_rl_upper,
            'prod_rl_upper': self.prod_rl_upper,
            'bounds': self.bounds,
            'verdicts': [
                {'family': v.family, 'holds': v.holds, 'parameter': v.parameter, 'bound': v.bound}
                for v in self.verdicts.values()
            ],
        }


def classify(dfa, **kwargs):
    """Decide the structural families and measures of a regular language.

    Parameters
    ----------
    dfa : Dfa
        The language.
    k_max : int, keyword only, optional
        The largest window width tried for SLT. The default is 4.
    definite_k_max : int, keyword only, optional
        The largest parameter tried for definiteness. The default is 8.
    mon_n_max : int, keyword only, optional
        The largest number of sub-alphabet stars tried for MON_n. The default is 3.

    Returns
    -------
    ClassificationReport
    """
    bounds = dict(DEFAULT_BOUNDS)
    for name in DEFAULT_BOUNDS:
        if name in kwargs:
            bounds[name] = kwargs.pop(name)
    if kwargs:
        raise TypeError('Unexpected keyword arguments: {!r}'.format(kwargs))
    d = dfa.minimize()
    finite = _decide_finite(d)
    slt = _decide_slt(d, bounds['k_max'])
    verdicts = [
        finite,
        _decide_nilpotent(d, finite),
        FamilyVerdict('monoidal', d.is_universal(), None, None,
                      d.alphabet if d.is_universal() else None),
        _decide_mon(d, bounds['mon_n_max']),
        _decide_combinational(d),
        _decide_definite(d, bounds['definite_k_max']),
        _decide_suffix_closed(d),
        slt,
    ]
    grammars = [dfa_to_rlg(d).reduce()]
    if slt.holds and slt.parameter == 1:
        grammars.append(slt1_to_rlg(slt.certificate).reduce())
    LOGGER.info('Classified a language with %d states.', d.n_states)
    return ClassificationReport(d, verdicts, grammars, bounds)


def _regenerate(verdict, alphabet):
    kind, cert = verdict.family, verdict.certificate
    if kind == 'finite':
        return Dfa.from_words(alphabet, cert)
    if kind == 'nilpotent':
        words = Dfa.from_words(alphabet, cert[1])
        return words if cert[0] == 'finite' else complement(words)
    if kind == 'monoidal':
        return Dfa.universal(cert)
    if kind == 'mon_n':
        return mon_dfa(alphabet, cert)
    if kind == 'combinational':
        return combinational_dfa(alphabet, cert)
    if kind == 'definite':
        return definite_dfa(alphabet, *cert)
    if kind == 'suffix_closed':
        return cert
    if kind == 'slt':
        return slt_to_dfa(cert)
    raise ValueError('No certificate format for {0!r}.'.format(kind))


def check_certificates(report, dfa):
    """Regenerate every certificate of a report and compare it with dfa.

    Returns
    -------
    list of str
        The names of the verdicts or measures whose certificate failed.
    """
    d = dfa.minimize()
    failed = []
    for name, verdict in report.verdicts.items():
        if not verdict.holds:
            continue
        regenerated = _regenerate(verdict, d.alphabet)
        if name == 'suffix_closed':
            ok = equivalent(regenerated, suffix_language(d)) and included(regenerated, d)
        else:
            ok = equivalent(regenerated, d)
        if not ok:
            failed.append(name)
    for name, grammar in sorted(report.search_certificates.items()):
        if not equivalent(grammar.to_dfa(), d):
            failed.append(name)
    return failed
