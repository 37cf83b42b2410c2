import collections
import logging

from ..utils import fresh_name
from .automata import DEFAULT_MAX_STATES, Nfa, check_alphabet, determinize_minimize


LOGGER = logging.getLogger(__name__)


class GrammarError(Exception):
    pass


RuleBase = collections.namedtuple(typename='RuleBase', field_names=['lhs', 'word', 'target'])


class Rule(RuleBase):
    """A right-linear rule ``lhs -> word target``.

    The word is a tuple of terminals and target is a nonterminal, or None
    for a terminating rule.
    """
    __slots__ = ()

    def __new__(cls, lhs, word, target=None):
        return super().__new__(cls, lhs, tuple(word), target)

    def __str__(self):
        body = list(self.word) + ([self.target] if self.target is not None else [])
        return '{0} -> {1}'.format(self.lhs, ' '.join(body) if body else 'λ')

    @property
    def terminating(self):
        return self.target is None


class RightLinearGrammar(object):
    """A right-linear grammar with rules of the form A -> wB or A -> w.

    Parameters
    ----------
    vars : sequence of str
        The nonterminals, in a fixed order.
    terminals : sequence of str
        The terminal alphabet.
    rules : iterable of Rule or triples
        The productions; duplicates are dropped and the first occurrence
        fixes the order.
    start : str
        The start nonterminal.
    """
    def __init__(self, vars, terminals, rules, start):
        self.vars = tuple(vars)
        self.terminals = check_alphabet(terminals)
        if len(set(self.vars)) != len(self.vars):
            raise GrammarError('Duplicate nonterminals in {0!r}.'.format(self.vars))
        if set(self.vars) & set(self.terminals):
            raise GrammarError('Nonterminals and terminals must be disjoint.')
        if start not in self.vars:
            raise GrammarError('The start symbol {0!r} is not a nonterminal.'.format(start))
        self.start = start
        unique = collections.OrderedDict()
        for rule in rules:
            rule = Rule(*rule)
            if rule.lhs not in self.vars:
                raise GrammarError('Unknown left-hand side in {0}.'.format(rule))
            if rule.target is not None and rule.target not in self.vars:
                raise GrammarError('Unknown target nonterminal in {0}.'.format(rule))
            if any(symbol not in self.terminals for symbol in rule.word):
                raise GrammarError('Non-terminal symbol inside the word of {0}.'.format(rule))
            unique[rule] = None
        self.rules = tuple(unique)

    def __repr__(self):
        return 'RightLinearGrammar(vars={0!r}, start={1!r}, rules=[{2}])'.format(
            self.vars, self.start, ', '.join(str(rule) for rule in self.rules),
        )

    def __eq__(self, other):
        if not isinstance(other, RightLinearGrammar):
            return NotImplemented
        return self._key() == other._key()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        return (self.vars, self.terminals, frozenset(self.rules), self.start)

    @property
    def n_vars(self):
        """Var(G), the number of nonterminals."""
        return len(self.vars)

    @property
    def n_prods(self):
        """Prod(G), the number of rules."""
        return len(self.rules)

    def rules_for(self, var):
        return [rule for rule in self.rules if rule.lhs == var]

    def trim(self):
        """Remove nonterminals that are unreachable or derive no terminal word."""
        productive = set()
        changed = True
        while changed:
            changed = False
            for rule in self.rules:
                if rule.lhs not in productive and (rule.target is None or rule.target in productive):
                    productive.add(rule.lhs)
                    changed = True
        reachable = {self.start}
        stack = [self.start]
        while stack:
            var = stack.pop()
            for rule in self.rules_for(var):
                if rule.target in productive and rule.target not in reachable:
                    reachable.add(rule.target)
                    stack.append(rule.target)
        keep = productive & reachable | {self.start}
        rules = [rule for rule in self.rules
                 if rule.lhs in keep and (rule.target is None or rule.target in keep)
                 and rule.lhs in productive]
        return RightLinearGrammar([v for v in self.vars if v in keep], self.terminals, rules, self.start)

    def reduce(self):
        """Trim, then inline non-start nonterminals whose rules all terminate."""
        grammar = self.trim()
        while True:
            inlinable = [
                var for var in grammar.vars
                if var != grammar.start and all(r.terminating for r in grammar.rules_for(var))
            ]
            if not inlinable:
                return grammar
            var = inlinable[0]
            endings = [rule.word for rule in grammar.rules_for(var)]
            rules = []
            for rule in grammar.rules:
                if rule.lhs == var:
                    continue
                if rule.target == var:
                    rules.extend(Rule(rule.lhs, rule.word + ending) for ending in endings)
                else:
                    rules.append(rule)
            grammar = RightLinearGrammar(
                [v for v in grammar.vars if v != var], grammar.terminals, rules, grammar.start,
            )

    def to_nfa(self):
        return rlg_to_nfa(self)

    def to_dfa(self, max_states=DEFAULT_MAX_STATES):
        return determinize_minimize(rlg_to_nfa(self), max_states)


def rlg_to_nfa(grammar):
    """Convert a right-linear grammar into an NFA of the same language.

    There is one state per nonterminal, one accepting state, and a chain of
    intermediate states for every rule word longer than one symbol.
    """
    number = {var: i for i, var in enumerate(grammar.vars)}
    accept = len(number)
    n_states = [accept + 1]
    transitions = collections.defaultdict(set)

    def chain(source, word, target):
        if not word:
            transitions[(source, None)].add(target)
            return
        state = source
        for symbol in word[:-1]:
            transitions[(state, symbol)].add(n_states[0])
            state = n_states[0]
            n_states[0] += 1
        transitions[(state, word[-1])].add(target)

    for rule in grammar.rules:
        target = accept if rule.target is None else number[rule.target]
        chain(number[rule.lhs], rule.word, target)
    return Nfa(grammar.terminals, n_states[0], [number[grammar.start]], [accept], transitions)


def dfa_to_rlg(dfa, prefix='Q'):
    """Read a DFA as a right-linear grammar with one nonterminal per state.

    State q becomes the nonterminal ``<prefix><q>``; every transition is a
    rule ``Qp -> a Qq`` and every final state contributes ``Qp -> λ``.
    """
    taken = set(dfa.alphabet)
    names = []
    for q in range(dfa.n_states):
        name = fresh_name('{0}{1}'.format(prefix, q), taken)
        taken.add(name)
        names.append(name)
    rules = []
    for q, row in enumerate(dfa.delta):
        for symbol, target in zip(dfa.alphabet, row):
            rules.append(Rule(names[q], (symbol,), names[target]))
        if q in dfa.finals:
            rules.append(Rule(names[q], ()))
    return RightLinearGrammar(names, dfa.alphabet, rules, names[dfa.start])
