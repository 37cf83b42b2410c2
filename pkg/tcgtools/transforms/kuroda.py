"""Monotone grammars and the Kuroda normal form.

The conversion runs in three language preserving phases.

1. ``separate_terminals`` replaces each terminal a inside a longer rule by a
   fresh nonterminal X_a with the rule X_a -> a.
2. ``chain_context_rules`` rewrites a rule A1 ... Am -> B1 ... Bn with m >= 2,
   other than the AB -> CD shape, into the chain A1 A2 -> B1 Z1,
   Z1 A3 -> B2 Z2, ..., Z(m-2) Am -> B(m-1) Z(m-1), Z(m-1) -> Bm ... Bn.
   Every Z occurs only in its own chain, so the chain cannot interleave with
   other rules in a way the original rule could not.
3. ``split_bodies`` rewrites A -> B1 ... Bn with n >= 3 into
   A -> B1 Y1, Y1 -> B2 Y2, ..., Y(n-2) -> B(n-1) Bn.
"""
import collections
import logging

from ..core.automata import check_alphabet
from ..utils import fresh_name, length_lex_key


LOGGER = logging.getLogger(__name__)


class NotMonotoneError(Exception):
    pass


class NotKurodaError(Exception):
    pass


class MonotoneGrammar(object):
    """A monotone (length-increasing) grammar.

    Parameters
    ----------
    vars : sequence of str
        The nonterminals.
    terminals : sequence of str
        The terminal alphabet.
    rules : iterable of pairs
        ``(lhs, rhs)`` pairs of symbol sequences. Every lhs contains a
        nonterminal and no rhs is shorter than its lhs, except the rule
        start -> λ when the start symbol occurs on no right-hand side.
    start : str
        The start symbol.
    """
    error = NotMonotoneError

    def __init__(self, vars, terminals, rules, start):
        self.vars = tuple(vars)
        self.terminals = check_alphabet(terminals)
        if len(set(self.vars)) != len(self.vars):
            raise self.error('Duplicate nonterminals in {0!r}.'.format(self.vars))
        if set(self.vars) & set(self.terminals):
            raise self.error('Nonterminals and terminals must be disjoint.')
        if start not in self.vars:
            raise self.error('The start symbol {0!r} is not a nonterminal.'.format(start))
        self.start = start
        symbols = set(self.vars) | set(self.terminals)
        unique = collections.OrderedDict()
        for lhs, rhs in rules:
            lhs, rhs = tuple(lhs), tuple(rhs)
            unknown = [symbol for symbol in lhs + rhs if symbol not in symbols]
            if unknown:
                raise self.error('Unknown symbols {0!r} in a rule.'.format(unknown))
            unique[(lhs, rhs)] = None
        self.rules = tuple(unique)
        for lhs, rhs in self.rules:
            self._check_rule(lhs, rhs)
        if self.has_empty_rule and any(self.start in rhs for _, rhs in self.rules):
            raise self.error('{0} -> λ needs {0} to occur on no right-hand side.'.format(self.start))

    def _check_rule(self, lhs, rhs):
        if not any(symbol in self.vars for symbol in lhs):
            raise self.error('The left-hand side {0} has no nonterminal.'.format(' '.join(lhs)))
        if not rhs and lhs == (self.start,):
            return
        if len(rhs) < len(lhs):
            raise self.error('The rule {0} shortens the sentential form.'.format(format_rule(lhs, rhs)))

    def __repr__(self):
        return '{0}(vars={1!r}, terminals={2!r}, start={3!r}, rules={4})'.format(
            type(self).__name__, self.vars, self.terminals, self.start, len(self.rules),
        )

    def __eq__(self, other):
        if not isinstance(other, MonotoneGrammar):
            return NotImplemented
        return self._key() == other._key()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        return (type(self).__name__, self.vars, self.terminals, frozenset(self.rules), self.start)

    @property
    def has_empty_rule(self):
        return ((self.start,), ()) in self.rules

    def is_nonterminal(self, symbol):
        return symbol in self.vars


class KurodaGrammar(MonotoneGrammar):
    """A grammar in Kuroda normal form.

    Every rule has one of the shapes AB -> CD, A -> BC, A -> B or A -> a,
    plus the optional start -> λ.
    """
    error = NotKurodaError

    def _check_rule(self, lhs, rhs):
        super(KurodaGrammar, self)._check_rule(lhs, rhs)
        if kuroda_shape(self, lhs, rhs) is None:
            raise NotKurodaError('The rule {0} is not in Kuroda form.'.format(format_rule(lhs, rhs)))

    def context_rules(self):
        return [(lhs, rhs) for lhs, rhs in self.rules if len(lhs) == 2]


def kuroda_shape(grammar, lhs, rhs):
    """Name the Kuroda shape of a rule, or return None if it has none."""
    nonterminal = grammar.is_nonterminal
    if lhs == (grammar.start,) and not rhs:
        return 'empty'
    if not all(nonterminal(x) for x in lhs):
        return None
    if len(lhs) == 2 and len(rhs) == 2 and all(nonterminal(x) for x in rhs):
        return 'context'
    if len(lhs) != 1:
        return None
    if len(rhs) == 2 and all(nonterminal(x) for x in rhs):
        return 'binary'
    if len(rhs) == 1:
        return 'chain' if nonterminal(rhs[0]) else 'terminal'
    return None


def format_rule(lhs, rhs):
    return '{0} -> {1}'.format(' '.join(lhs), ' '.join(rhs) or 'λ')


def enumerate_monotone(grammar, max_len):
    """Enumerate the words of a monotone grammar up to a length.

    Sentential forms never shrink along a derivation, so a breadth-first walk
    over the forms of length at most max_len finds every such word.

    Returns
    -------
    list of tuple
        The words in length-then-lexicographic order.
    """
    start = (grammar.start,)
    seen = {start}
    queue = collections.deque([start])
    words = set()
    while queue:
        form = queue.popleft()
        for lhs, rhs in grammar.rules:
            width = len(lhs)
            if len(form) - width + len(rhs) > max_len:
                continue
            for i in range(len(form) - width + 1):
                if form[i:i + width] != lhs:
                    continue
                successor = form[:i] + rhs + form[i + width:]
                if successor in seen:
                    continue
                seen.add(successor)
                if all(not grammar.is_nonterminal(x) for x in successor):
                    words.add(successor)
                else:
                    queue.append(successor)
    LOGGER.debug('Visited %d sentential forms up to length %d.', len(seen), max_len)
    return sorted(words, key=length_lex_key(grammar.terminals))


class _Names(object):
    """Fresh nonterminal names for one conversion."""

    def __init__(self, grammar):
        self.taken = set(grammar.vars) | set(grammar.terminals)
        self.added = []

    def new(self, base):
        name = fresh_name(base, self.taken)
        self.taken.add(name)
        self.added.append(name)
        return name


def separate_terminals(grammar):
    """Replace the terminals of every rule other than A -> a by nonterminals X_a."""
    names = _Names(grammar)
    proxies = collections.OrderedDict()

    def proxy(symbol):
        if grammar.is_nonterminal(symbol):
            return symbol
        if symbol not in proxies:
            proxies[symbol] = names.new('X_' + symbol)
        return proxies[symbol]

    rules = []
    for lhs, rhs in grammar.rules:
        if (len(lhs) == 1 and len(rhs) == 1) or not rhs:
            rules.append((lhs, rhs))
        else:
            rules.append((tuple(proxy(x) for x in lhs), tuple(proxy(x) for x in rhs)))
    rules.extend(((name,), (symbol,)) for symbol, name in proxies.items())
    LOGGER.debug('Separated terminals with %d new nonterminals.', len(names.added))
    return MonotoneGrammar(grammar.vars + tuple(names.added), grammar.terminals, rules, grammar.start)


def _split(lhs, rhs, names):
    rules = []
    head = lhs[0]
    for symbol in rhs[:-2]:
        tail = names.new('Y')
        rules.append(((head,), (symbol, tail)))
        head = tail
    rules.append(((head,), rhs[-2:]))
    return rules


def split_bodies(grammar):
    """Split every rule A -> B1 ... Bn with n >= 3 into binary rules."""
    names = _Names(grammar)
    rules = []
    for lhs, rhs in grammar.rules:
        if len(lhs) == 1 and len(rhs) >= 3:
            rules.extend(_split(lhs, rhs, names))
        else:
            rules.append((lhs, rhs))
    return MonotoneGrammar(grammar.vars + tuple(names.added), grammar.terminals, rules, grammar.start)


def chain_context_rules(grammar):
    """Rewrite every context rule other than AB -> CD into a chain of such rules.

    The input must have terminals separated, so context rules range over
    nonterminals only.
    """
    names = _Names(grammar)
    rules = []
    for lhs, rhs in grammar.rules:
        m, n = len(lhs), len(rhs)
        if m < 2 or (m == 2 and n == 2):
            rules.append((lhs, rhs))
            continue
        carry = lhs[0]
        for i in range(1, m):
            link = names.new('Z')
            rules.append(((carry, lhs[i]), (rhs[i - 1], link)))
            carry = link
        rules.append(((carry,), rhs[m - 1:]))
    return MonotoneGrammar(grammar.vars + tuple(names.added), grammar.terminals, rules, grammar.start)


def monotone_to_kuroda(grammar):
    """Convert a monotone grammar into an equivalent grammar in Kuroda normal form.

    Parameters
    ----------
    grammar : MonotoneGrammar
        The source grammar.

    Returns
    -------
    KurodaGrammar
    """
    converted = split_bodies(chain_context_rules(separate_terminals(grammar)))
    LOGGER.info('Kuroda form: %d nonterminals, %d rules.', len(converted.vars), len(converted.rules))
    return KurodaGrammar(converted.vars, converted.terminals, converted.rules, converted.start)
