"""The witness languages that separate the language families.

Each case builds its language from one or more source descriptions and
lists the membership claims that separate two families. Parameterized
cases take n within a supported range; the upper end of the range is the
configured ``max_witness_n`` and raising it logs a warning.
"""
import collections
import logging

from ..core.grammars import RightLinearGrammar, Rule
from ..core.measures import to_dfa
from ..core.regex import Literal, RegularExpression, Star, concat_all, union_all, word_regex
from ..subregular.search import Budget
from ..subregular.slt import SltDescription, slt1_to_rlg


LOGGER = logging.getLogger(__name__)

#: Parameterized cases accept n up to this value without a warning.
DEFAULT_MAX_N = 6

#: The default bound of negative SLT claims.
SLT_K_MAX = 4


class UnknownWitnessError(Exception):
    pass


class UnsupportedParameterError(Exception):
    pass


ClaimBase = collections.namedtuple(typename='ClaimBase', field_names=['family', 'parameter', 'member', 'bound'])


class Claim(ClaimBase):
    """A membership claim about a witness language.

    ``family`` is one of 'REG_Z' (state complexity at most the parameter),
    'SLT_k' (strictly locally k-testable for k the parameter), 'SLT' (for
    some k up to the bound), 'RL_V' and 'RL_P' (a right-linear grammar with
    at most parameter nonterminals or productions, searched within the
    budget given as bound).
    """
    __slots__ = ()

    @property
    def bounded(self):
        """True for a negative claim that only holds up to its bound."""
        return not self.member and self.family in ('SLT', 'RL_V', 'RL_P')

    def __str__(self):
        relation = '∈' if self.member else '∉'
        if self.family == 'SLT':
            return 'L {0} SLT (k <= {1})'.format(relation, self.bound)
        if self.family == 'SLT_k':
            return 'L {0} SLT_{1}'.format(relation, self.parameter)
        if self.family == 'REG_Z':
            return 'L {0} REG_{1}^Z'.format(relation, self.parameter)
        name = 'RL_{0}^{1}'.format(self.parameter, self.family[-1])
        return 'L {0} {1} (budget {2})'.format(relation, name, self.bound)


WitnessCaseBase = collections.namedtuple(
    typename='WitnessCaseBase', field_names=['id', 'n', 'title', 'dfa', 'sources', 'claims'],
)


class WitnessCase(WitnessCaseBase):
    """A witness language with its sources and claims.

    Attributes
    ----------
    id : str
        The catalog id.
    n : int or None
        The parameter of a parameterized case.
    title : str
        A short description of the language.
    dfa : Dfa
        The minimal DFA, compiled from the first source.
    sources : OrderedDict
        Source name to a regular expression, SLT description or grammar.
    claims : tuple of Claim
    """
    __slots__ = ()

    @property
    def name(self):
        return self.id if self.n is None else '{0}(n={1})'.format(self.id, self.n)


def _letters(count):
    return tuple('a{0}'.format(i) for i in range(1, count + 1))


def _plus(symbol):
    return concat_all([Literal(symbol), Star(Literal(symbol))])


def _regex(text, alphabet):
    return RegularExpression.from_text(text, alphabet)


def _l1(n):
    alphabet = ('a', 'b')
    rlg = RightLinearGrammar(['S', 'T'], alphabet, [
        Rule('S', 'a', 'S'), Rule('S', 'b', 'T'), Rule('T', 'a', 'T'), Rule('T', 'b', 'T'), Rule('T', ''),
    ], 'S')
    sources = [('regex', _regex('a*b(a|b)*', alphabet)), ('rlg', rlg)]
    claims = [Claim('REG_Z', 2, True, None), Claim('SLT', None, False, SLT_K_MAX)]
    return 'a* b (a|b)*', sources, claims


def _l2(n):
    alphabet = ('a', 'b', 'c')
    desc = SltDescription(1, alphabet, B=['a', 'b'], I=['b', 'c'], E=['a', 'c'])
    sources = [('slt', desc), ('regex', _regex('a | (a|b)(b|c)*(a|c)', alphabet))]
    claims = [Claim('SLT_k', 1, True, None), Claim('REG_Z', 4, False, None), Claim('REG_Z', 5, True, None)]
    return '<{a,b},{b,c},{a,c},∅> with k=1', sources, claims


def _l3(n):
    alphabet = _letters(n - 1)
    if n == 2:
        desc = SltDescription(2, alphabet, F=[alphabet])
    else:
        desc = SltDescription(
            2, alphabet,
            B=[alphabet[0:2]],
            I=[alphabet[p - 1:p + 1] for p in range(2, n - 2)],
            E=[alphabet[n - 3:n - 1]],
        )
    sources = [('regex', RegularExpression(word_regex(alphabet), alphabet)), ('slt', desc)]
    claims = [
        Claim('SLT_k', 2, True, None),
        Claim('REG_Z', n, False, None),
        Claim('REG_Z', n + 1, True, None),
    ]
    return '{{{0}}}'.format(' '.join(alphabet)), sources, claims


def _l4(n):
    alphabet = ('a',)
    word = ('a',) * n
    rlg = RightLinearGrammar(['S'], alphabet, [Rule('S', word)], 'S')
    sources = [
        ('regex', RegularExpression(word_regex(word), alphabet)),
        ('rlg', rlg),
        ('slt', SltDescription(n + 1, alphabet, F=[word])),
    ]
    claims = [
        Claim('RL_P', 1, True, Budget(1, 1, n)),
        Claim('SLT_k', n, False, None),
        Claim('SLT_k', n + 1, True, None),
    ]
    return '{{a^{0}}}'.format(n), sources, claims


def _l5(n):
    alphabet = _letters(n)
    letters = [(a,) for a in alphabet]
    desc = SltDescription(1, alphabet, B=letters, I=letters, E=letters, F=[()])
    regex = RegularExpression(Star(union_all(Literal(a) for a in alphabet)), alphabet)
    sources = [('slt', desc), ('regex', regex)]
    claims = [Claim('SLT_k', 1, True, None), Claim('RL_P', n, False, Budget(n, n, 4))]
    return '({0})*'.format(' | '.join(alphabet)), sources, claims


def _l6(n):
    alphabet = ('a',)
    rlg = RightLinearGrammar(['S'], alphabet, [Rule('S', 'a')], 'S')
    sources = [('regex', _regex('a', alphabet)), ('rlg', rlg), ('slt', SltDescription(2, alphabet, F=['a']))]
    claims = [Claim('RL_V', 1, True, Budget(1, 1, 1)), Claim('SLT_k', 1, False, None)]
    return '{a}', sources, claims


def _l7(n):
    alphabet = ('a', 'b')
    desc = SltDescription(1, alphabet, B=['a'], I=['b'], E=['a'])
    sources = [('regex', _regex('ab*a|a', alphabet)), ('slt', desc), ('rlg', slt1_to_rlg(desc))]
    claims = [Claim('SLT_k', 1, True, None), Claim('RL_V', 1, False, Budget(1, 6, 4))]
    return 'a b* a | a', sources, claims


def _l8(n):
    alphabet = ('a',)
    rlg = RightLinearGrammar(['S'], alphabet, [Rule('S', 'aaa', 'S'), Rule('S', 'aaa')], 'S')
    sources = [('regex', _regex('aaa(aaa)*', alphabet)), ('rlg', rlg)]
    claims = [Claim('RL_V', 1, True, Budget(1, 2, 3)), Claim('SLT', None, False, 6)]
    return '{a^(3m) : m >= 1}', sources, claims


def _l9(n):
    alphabet = _letters(n + 1)
    first, last = alphabet[0], alphabet[-1]
    desc = SltDescription(
        2, alphabet,
        B=[(first, first), (first, alphabet[1])],
        I=[(a, a) for a in alphabet] + list(zip(alphabet, alphabet[1:])),
        E=[(alphabet[-2], last), (last, last)],
    )
    regex = RegularExpression(concat_all(_plus(a) for a in alphabet), alphabet)
    sources = [('slt', desc), ('regex', regex)]
    budget = Budget(n, 2 * (n + 1), 2)
    claims = [Claim('SLT_k', 2, True, None), Claim('RL_V', n, False, budget)]
    return ' '.join('{0}+'.format(a) for a in alphabet), sources, claims


#: Catalog id to (builder, smallest n); fixed cases have no smallest n.
CATALOG = collections.OrderedDict([
    ('l-l1', (_l1, None)),
    ('l-l2', (_l2, None)),
    ('l-l3', (_l3, 2)),
    ('l-l4', (_l4, 1)),
    ('l-l5', (_l5, 1)),
    ('l-l6', (_l6, None)),
    ('l-l7', (_l7, None)),
    ('l-l8', (_l8, None)),
    ('l-l9', (_l9, 1)),
])


def witness_ids():
    return list(CATALOG)


def build_witness(id, n=None, max_n=DEFAULT_MAX_N):
    """Build a witness case from the catalog.

    Parameters
    ----------
    id : str
        A catalog id, 'l-l1' to 'l-l9'.
    n : int, optional
        The parameter of l-l3, l-l4, l-l5 and l-l9. The default is the
        smallest supported value.
    max_n : int, optional
        The largest n accepted. Values above the default log a warning.

    Raises
    ------
    UnknownWitnessError
        If id is not in the catalog.
    UnsupportedParameterError
        If n is given for a fixed case or lies outside the supported range.
    """
    try:
        builder, smallest = CATALOG[id]
    except KeyError:
        raise UnknownWitnessError('Unknown witness {0!r}, expected one of {1}.'.format(id, ', '.join(CATALOG)))
    if smallest is None:
        if n is not None:
            raise UnsupportedParameterError('The witness {0} takes no parameter.'.format(id))
    else:
        if n is None:
            n = smallest
        if not isinstance(n, int) or not smallest <= n <= max_n:
            raise UnsupportedParameterError('The witness {0} supports {1} <= n <= {2}, got {3!r}.'.format(
                id, smallest, max_n, n))
        if n > DEFAULT_MAX_N:
            LOGGER.warning('Building %s with n=%d above the default range; checks may be slow.', id, n)
    title, sources, claims = builder(n)
    sources = collections.OrderedDict(sources)
    dfa = to_dfa(next(iter(sources.values())))
    return WitnessCase(id, n, title, dfa, sources, tuple(claims))


def default_cases(max_n=4):
    """All catalog cases, the parameterized ones for every n up to max_n."""
    cases = []
    for id, (_, smallest) in CATALOG.items():
        if smallest is None:
            cases.append(build_witness(id))
        else:
            cases.extend(build_witness(id, n) for n in range(smallest, max_n + 1))
    return cases
