"""Strictly locally testable languages.

A description ``<B, I, E, F>`` of window width k accepts a word w when

* ``|w| < k`` and w is in F,
* ``|w| = k`` and w is in both B and E,
* ``|w| > k``, the k-prefix of w is in B, the k-suffix of w is in E, and every
  window starting at positions 2 .. |w| - k (1-based) is in I.

The first and the last window are not required to be in I.
"""
import collections
import logging

from ..core.automata import (
    DEFAULT_MAX_STATES, Dfa, StateBudgetExceeded, UnknownSymbolError, check_alphabet, enumerate_dfa, equivalent,
)
from ..core.grammars import RightLinearGrammar, Rule
from ..utils import fresh_name, length_lex_key


LOGGER = logging.getLogger(__name__)

SLT_METHODS = ('window', 'five-state')


class SltWidthError(Exception):
    pass


class SltDescription(object):
    """The quadruple ``<B, I, E, F>`` of window width k over an explicit alphabet.

    Parameters
    ----------
    k : int
        The window width, at least 1.
    alphabet : sequence of str
        The alphabet the description is relative to.
    B, I, E : iterable of words
        Prefix, interior and suffix windows, each of length exactly k.
    F : iterable of words
        The accepted words shorter than k.
    """
    def __init__(self, k, alphabet, B=(), I=(), E=(), F=()):
        if not isinstance(k, int) or k < 1:
            raise SltWidthError('The window width must be a positive integer, got {0!r}.'.format(k))
        self.k = k
        self.alphabet = check_alphabet(alphabet)
        self.B = self._check_words('B', B, lambda n: n == k)
        self.I = self._check_words('I', I, lambda n: n == k)
        self.E = self._check_words('E', E, lambda n: n == k)
        self.F = self._check_words('F', F, lambda n: n < k)

    def _check_words(self, name, words, length_ok):
        words = frozenset(tuple(word) for word in words)
        for word in words:
            if not length_ok(len(word)):
                raise SltWidthError('The word {0!r} in {1} has the wrong length for k={2}.'.format(
                    word, name, self.k))
            for symbol in word:
                if symbol not in self.alphabet:
                    raise UnknownSymbolError('The symbol {0!r} in {1} is not in the alphabet.'.format(
                        symbol, name))
        return words

    def __repr__(self):
        return 'SltDescription(k={0}, alphabet={1!r}, B={2}, I={3}, E={4}, F={5})'.format(
            self.k, self.alphabet, *(self.sorted_words(name) for name in 'BIEF')
        )

    def __eq__(self, other):
        if not isinstance(other, SltDescription):
            return NotImplemented
        return self._key() == other._key()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        return (self.k, self.alphabet, self.B, self.I, self.E, self.F)

    def sorted_words(self, name):
        """Return one of the sets B, I, E, F in length-lexicographic order."""
        return sorted(getattr(self, name), key=length_lex_key(self.alphabet))

    def accepts(self, word):
        return slt_member(self, word)

    def to_dfa(self, method='window', max_states=DEFAULT_MAX_STATES):
        return slt_to_dfa(self, method, max_states)


def slt_member(desc, word):
    """Decide membership of word in the language of an SLT description.

    Raises
    ------
    UnknownSymbolError
        If word uses a symbol outside the description's alphabet.
    """
    word = tuple(word)
    for symbol in word:
        if symbol not in desc.alphabet:
            raise UnknownSymbolError('The symbol {0!r} is not in the alphabet.'.format(symbol))
    k = desc.k
    if len(word) < k:
        return word in desc.F
    if len(word) == k:
        return word in desc.B and word in desc.E
    if word[:k] not in desc.B or word[-k:] not in desc.E:
        return False
    return all(word[j:j + k] in desc.I for j in range(1, len(word) - k))


def _window_dfa(desc, max_states):
    k = desc.k
    dead = ('dead',)
    start = ('short', ())
    number = {start: 0}
    order = [start]
    delta = []

    def successor(key, symbol):
        if key == dead:
            return dead
        if key[0] == 'short':
            word = key[1] + (symbol,)
            if len(word) < k:
                return ('short', word)
            return ('long', word, True) if word in desc.B else dead
        window, first = key[1], key[2]
        if not first and window not in desc.I:
            return dead
        return ('long', window[1:] + (symbol,), False)

    for key in order:
        row = []
        for symbol in desc.alphabet:
            target = successor(key, symbol)
            if target not in number:
                if len(order) >= max_states:
                    raise StateBudgetExceeded(
                        'The window construction exceeded {0} states.'.format(max_states)
                    )
                number[target] = len(order)
                order.append(target)
            row.append(number[target])
        delta.append(row)
    finals = []
    for key, state in number.items():
        if key[0] == 'short' and key[1] in desc.F:
            finals.append(state)
        elif key[0] == 'long' and key[1] in desc.E:
            finals.append(state)
    return Dfa(desc.alphabet, delta, 0, finals)


def five_state_dfa(desc):
    """Build the five-state DFA of a width-1 description with F a subset of {λ}.

    State 4 is the sink, states 1 and 2 accept, and state 0 accepts iff λ is in F.
    """
    if desc.k != 1 or not desc.F <= {()}:
        raise SltWidthError('The five-state construction needs k=1 and F within {λ}.')
    B, I, E = ({word[0] for word in words} for words in (desc.B, desc.I, desc.E))
    z0, z1, z2, z3, z4 = range(5)

    def from_start(symbol):
        if symbol in B:
            return z1 if symbol in E else z3
        return z4

    def from_open(symbol):
        if symbol in I:
            return z1 if symbol in E else z3
        return z2 if symbol in E else z4

    delta = [
        [from_start(symbol) for symbol in desc.alphabet],
        [from_open(symbol) for symbol in desc.alphabet],
        [z4] * len(desc.alphabet),
        [from_open(symbol) for symbol in desc.alphabet],
        [z4] * len(desc.alphabet),
    ]
    finals = {z1, z2} | ({z0} if () in desc.F else set())
    return Dfa(desc.alphabet, delta, z0, finals)


def slt_to_dfa(desc, method='window', max_states=DEFAULT_MAX_STATES):
    """Build a DFA of the language of an SLT description.

    Parameters
    ----------
    desc : SltDescription
        The description.
    method : {'window', 'five-state'}
        The window method remembers the last k symbols and returns the minimal
        canonical DFA. The five-state method needs k=1 and F within {λ} and
        returns the five-state automaton unminimized.
    max_states : int, optional
        The state budget of the window method.

    Raises
    ------
    StateBudgetExceeded
        If the window method needs more than max_states states.
    """
    if method == 'window':
        return _window_dfa(desc, max_states).minimize()
    if method == 'five-state':
        return five_state_dfa(desc)
    raise ValueError('Unknown method {0!r}, expected one of {1}.'.format(method, SLT_METHODS))


def slt1_to_rlg(desc):
    """Build the two-variable right-linear grammar of a width-1 description.

    The rules are S -> w for w in F and in both B and E, S -> b S' for b in B,
    S' -> i S' for i in I and S' -> e for e in E, which generate
    F ∪ (B∩E) ∪ B I* E.
    """
    if desc.k != 1:
        raise SltWidthError('The two-variable construction needs k=1, got k={0}.'.format(desc.k))
    start = fresh_name('S', set(desc.alphabet))
    tail = fresh_name(start + "'", set(desc.alphabet) | {start})
    key = length_lex_key(desc.alphabet)
    rules = [Rule(start, word) for word in sorted(desc.F | (desc.B & desc.E), key=key)]
    rules.extend(Rule(start, word, tail) for word in sorted(desc.B, key=key))
    rules.extend(Rule(tail, word, tail) for word in sorted(desc.I, key=key))
    rules.extend(Rule(tail, word) for word in sorted(desc.E, key=key))
    return RightLinearGrammar([start, tail], desc.alphabet, rules, start)


def _coreachable(dfa, targets):
    """States with a path of length zero or more into targets."""
    predecessors = collections.defaultdict(set)
    for q, row in enumerate(dfa.delta):
        for target in row:
            predecessors[target].add(q)
    seen = set(targets)
    stack = list(targets)
    while stack:
        for q in predecessors[stack.pop()]:
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


def _windows(dfa, sources, k, targets):
    """Words u of length k with δ(q, u) in targets for some q in sources."""
    useful = _coreachable(dfa, targets)
    words = []

    def walk(states, word):
        states = frozenset(q for q in states if q in useful)
        if not states:
            return
        if len(word) == k:
            if states & targets:
                words.append(word)
            return
        for i, symbol in enumerate(dfa.alphabet):
            walk({dfa.delta[q][i] for q in states}, word + (symbol,))

    walk(sources, ())
    return words


def canonical_slt(dfa, k):
    """Extract the canonical width-k description of a DFA's language.

    B holds the k-prefixes and E the k-suffixes of the words of length at
    least k, I the windows starting at positions 2 .. |w| - k of the longer
    words, and F the words shorter than k. Every set is read off the
    automaton exactly.
    """
    d = dfa.minimize()
    reachable = d.reachable_states
    after_one = {target for q in reachable for target in d.delta[q]}
    live = d.live_states
    before_one = {q for q in range(d.n_states) if any(t in live for t in d.delta[q])}
    return SltDescription(
        k,
        d.alphabet,
        B=_windows(d, {d.start}, k, frozenset(live)),
        I=_windows(d, after_one, k, frozenset(before_one)),
        E=_windows(d, reachable, k, d.finals),
        F=enumerate_dfa(d, k - 1),
    )


SltVerdictBase = collections.namedtuple(
    typename='SltVerdictBase', field_names=['holds', 'k', 'description', 'counterexample'],
)


class SltVerdict(SltVerdictBase):
    """The answer of an SLT decision, truthy iff the property holds.

    A positive verdict carries the canonical description of width k. A
    negative verdict carries the shortest word the canonical description
    accepts outside the language; for a search up to a bound, k is that bound.
    """
    __slots__ = ()

    def __bool__(self):
        return bool(self.holds)

    def __repr__(self):
        return 'SltVerdict({0})'.format(', '.join('{0}={1!r}'.format(k, v) for k, v in self._asdict().items()))


def is_slt_k(dfa, k):
    """Decide whether L(dfa) is strictly locally k-testable.

    If any description of width k generates the language then the canonical
    one does, so the decision compares the canonical description with dfa.
    """
    d = dfa.minimize()
    desc = canonical_slt(d, k)
    holds, witness = equivalent(slt_to_dfa(desc), d, return_witness=True)
    LOGGER.debug('SLT_%d check: %s.', k, 'holds' if holds else 'fails on {0!r}'.format(witness))
    return SltVerdict(holds, k, desc if holds else None, witness)


def is_slt_upto(dfa, k_max):
    """Return the verdict for the smallest k <= k_max, or a bounded negative verdict."""
    if k_max < 1:
        raise SltWidthError('k_max must be at least 1, got {0}.'.format(k_max))
    verdict = None
    for k in range(1, k_max + 1):
        verdict = is_slt_k(dfa, k)
        if verdict:
            return verdict
    return SltVerdict(False, k_max, None, verdict.counterexample)
