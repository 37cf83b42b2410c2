import collections
import collections.abc
import logging

from ..core.automata import check_alphabet


LOGGER = logging.getLogger(__name__)


class GrammarShapeError(Exception):
    pass


class Cfg(object):
    """A context-free grammar.

    Parameters
    ----------
    vars : sequence of str
        The nonterminals, in a fixed order.
    terminals : sequence of str
        The terminal alphabet.
    rules : mapping or iterable of pairs
        Either a mapping from nonterminal to bodies or ``(lhs, body)`` pairs.
        Bodies are sequences over vars and terminals; duplicates are dropped.
    start : str
        The start symbol.

    Notes
    -----
    The non-erasing condition is not enforced here, :func:`validate_tc`
    reports it instead.
    """
    def __init__(self, vars, terminals, rules, start):
        self.vars = tuple(vars)
        self.terminals = check_alphabet(terminals)
        if len(set(self.vars)) != len(self.vars):
            raise GrammarShapeError('Duplicate nonterminals in {0!r}.'.format(self.vars))
        if set(self.vars) & set(self.terminals):
            raise GrammarShapeError('Nonterminals and terminals must be disjoint.')
        if start not in self.vars:
            raise GrammarShapeError('The start symbol {0!r} is not a nonterminal.'.format(start))
        self.start = start
        if isinstance(rules, collections.abc.Mapping):
            rules = [(lhs, body) for lhs, bodies in rules.items() for body in bodies]
        symbols = set(self.vars) | set(self.terminals)
        table = collections.OrderedDict((var, collections.OrderedDict()) for var in self.vars)
        for lhs, body in rules:
            body = tuple(body)
            if lhs not in table:
                raise GrammarShapeError('Unknown left-hand side {0!r}.'.format(lhs))
            unknown = [symbol for symbol in body if symbol not in symbols]
            if unknown:
                raise GrammarShapeError('Unknown symbols {0!r} in a rule for {1!r}.'.format(unknown, lhs))
            table[lhs][body] = None
        self.rules = collections.OrderedDict((var, tuple(bodies)) for var, bodies in table.items())

    def __repr__(self):
        return 'Cfg(vars={0!r}, terminals={1!r}, start={2!r}, rules={3})'.format(
            self.vars, self.terminals, self.start, self.n_rules,
        )

    def __eq__(self, other):
        if not isinstance(other, Cfg):
            return NotImplemented
        return self._key() == other._key()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        rules = frozenset((var, body) for var, bodies in self.rules.items() for body in bodies)
        return (self.vars, self.terminals, rules, self.start)

    @property
    def symbols(self):
        """Nonterminals followed by terminals, the alphabet of a control language."""
        return self.vars + self.terminals

    @property
    def n_rules(self):
        return sum(len(bodies) for bodies in self.rules.values())

    def pairs(self):
        """Yield every rule as an ``(lhs, body)`` pair in a fixed order."""
        for var, bodies in self.rules.items():
            for body in bodies:
                yield var, body

    def is_nonterminal(self, symbol):
        return symbol in self.rules


class TcGrammar(object):
    """A tree-controlled grammar: a context-free core and a control DFA.

    Every level word of a derivation tree except the last must belong to the
    control language, which is a DFA over the core's nonterminals and terminals.
    """
    def __init__(self, core, control):
        self.core = core
        self.control = control

    def __repr__(self):
        return 'TcGrammar(core={0!r}, control={1!r})'.format(self.core, self.control)

    def __eq__(self, other):
        if not isinstance(other, TcGrammar):
            return NotImplemented
        return (self.core, self.control) == (other.core, other.control)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.core, self.control))


def validate_tc(grammar):
    """Check the shape conditions of a tree-controlled grammar.

    Returns
    -------
    list of str
        The violations found; an empty list means the grammar is valid.
    """
    core = grammar.core
    violations = []
    for var, body in core.pairs():
        if not body and var != core.start:
            violations.append('erasing rule {0} -> λ'.format(var))
    if () in core.rules[core.start]:
        on_right = [var for var, body in core.pairs() if core.start in body]
        if on_right:
            violations.append(
                'start symbol {0} occurs on a right-hand side while {0} -> λ is present'.format(core.start)
            )
    if set(grammar.control.alphabet) != set(core.symbols):
        violations.append('control alphabet mismatch: {0!r} is not {1!r}'.format(
            sorted(grammar.control.alphabet), sorted(core.symbols)))
    for violation in violations:
        LOGGER.debug('TC grammar violation: %s', violation)
    return violations
