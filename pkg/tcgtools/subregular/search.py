"""Budgeted search for small right-linear grammars.

The search realizes Var_RL and Prod_RL within an explicit budget of
nonterminals, productions and rule word length. It runs in two phases.

1. Every nonterminal A of a grammar for L generates a language Y_A with
   u Y_A contained in L for each u leading to A, so Y_A may be enlarged to an
   intersection of residuals of L without changing L(G). The candidate
   languages are therefore the intersections of residuals, represented by
   the closed set of minimal-DFA states whose residuals contain them. For a
   choice of candidates the maximal grammar holds every rule A -> wB with
   w Y_B within Y_A and every rule A -> w with w in Y_A. Some grammar over a
   choice exists iff its maximal grammar generates L.
2. Every subset of a maximal grammar generates a subset of L. The smallest
   subsets generating L are found breadth first by size, branching only on
   rules whose word is a factor of the shortest word still missing, and
   pruned by a lower bound: each one-letter word of L needs its own rule
   with exactly that word, and λ in L needs a terminating λ-rule.
"""
import collections
import itertools
import logging
import math

from ..core.automata import equivalent
from ..core.grammars import RightLinearGrammar, Rule
from ..utils import fresh_name


LOGGER = logging.getLogger(__name__)

#: Default cap on assignments plus search nodes examined by one search.
DEFAULT_SEARCH_CAP = 200000


class SearchSpaceExceeded(Exception):
    pass


class BudgetError(ValueError):
    pass


BudgetBase = collections.namedtuple(typename='BudgetBase', field_names=['max_vars', 'max_prods', 'max_rhs_len'])


class Budget(BudgetBase):
    """The limits of a grammar search."""
    __slots__ = ()

    def __new__(cls, max_vars, max_prods, max_rhs_len):
        values = (max_vars, max_prods, max_rhs_len)
        if any(not isinstance(v, int) or v < 1 for v in values):
            raise BudgetError('Budget components must be positive integers, got {0!r}.'.format(values))
        return super().__new__(cls, *values)

    @classmethod
    def parse(cls, text):
        """Parse the ``vars,prods,rhs`` form used on the command line."""
        try:
            values = [int(part) for part in text.split(',')]
        except ValueError:
            values = []
        if len(values) != 3:
            raise BudgetError('A budget has three integer components, got {0!r}.'.format(text))
        return cls(*values)

    def __str__(self):
        return '{{{0},{1},{2}}}'.format(*self)


SearchResultBase = collections.namedtuple(
    typename='SearchResultBase',
    field_names=['grammar', 'budget', 'bodies', 'candidates', 'assignments', 'nodes'],
)


class SearchResult(SearchResultBase):
    """The outcome of :func:`search_rlg`, truthy iff a grammar was found.

    ``bodies`` counts the candidate rule words, ``candidates`` the candidate
    nonterminal languages, ``assignments`` the maximal grammars checked and
    ``nodes`` the rule subsets examined.
    """
    __slots__ = ()

    def __bool__(self):
        return self.grammar is not None


class _Counter(object):

    def __init__(self, cap):
        self.cap = cap
        self.assignments = 0
        self.nodes = 0

    def tick(self, field):
        setattr(self, field, getattr(self, field) + 1)
        if self.assignments + self.nodes > self.cap:
            raise SearchSpaceExceeded('The grammar search exceeded its cap of {0}.'.format(self.cap))


def factors(dfa, max_len):
    """List the factors of words of L(dfa) up to max_len, λ included.

    The words come in length-then-lexicographic order.
    """
    d = dfa.minimize()
    live = d.live_states
    found = [()]
    layer = [((), frozenset(d.reachable_states & live))]
    for _ in range(max_len):
        next_layer = []
        for word, states in layer:
            for i, symbol in enumerate(d.alphabet):
                targets = frozenset(d.delta[q][i] for q in states) & live
                if targets:
                    next_layer.append((word + (symbol,), targets))
        found.extend(word for word, _ in next_layer)
        layer = next_layer
    return found


def _acceptance_sets(d, cap):
    """The sets {q : δ(q, x) final} over all words x, via the transition monoid."""
    n = d.n_states
    generators = [tuple(d.delta[q][i] for q in range(n)) for i in range(len(d.alphabet))]
    identity = tuple(range(n))
    seen = {identity}
    queue = [identity]
    for f in queue:
        for g in generators:
            h = tuple(g[f[q]] for q in range(n))
            if h not in seen:
                if len(seen) >= cap:
                    raise SearchSpaceExceeded('The transition monoid exceeded {0} elements.'.format(cap))
                seen.add(h)
                queue.append(h)
    return {frozenset(q for q in range(n) if f[q] in d.finals) for f in seen}


def candidate_languages(dfa, cap=DEFAULT_SEARCH_CAP):
    """Return the closed state sets standing for the candidate nonterminal languages.

    A closed set C stands for the language of words accepted from every state
    of C; the sets are the non-empty intersections of acceptance sets.
    """
    d = dfa.minimize()
    closed = {s for s in _acceptance_sets(d, cap) if s}
    frontier = list(closed)
    while frontier:
        added = []
        for a in frontier:
            for b in list(closed):
                c = a & b
                if c and c not in closed:
                    closed.add(c)
                    added.append(c)
        frontier = added
    return sorted(closed, key=lambda s: (len(s), sorted(s)))


def _maximal_rules(d, assignment, bodies):
    rules = []
    for i, states in enumerate(assignment):
        for word in bodies:
            image = frozenset(d.run(word, q) for q in states)
            if image <= d.finals:
                rules.append(Rule(i, word))
            for j, target in enumerate(assignment):
                if image <= target:
                    rules.append(Rule(i, word, j))
    return rules


def _indexed_grammar(alphabet, rules):
    """Build a grammar from rules whose nonterminals are integers, 0 the start."""
    used = sorted({0} | {r.lhs for r in rules} | {r.target for r in rules if r.target is not None})
    taken = set(alphabet)
    names = {}
    for var in used:
        names[var] = fresh_name('V{0}'.format(var), taken)
        taken.add(names[var])
    renamed = [Rule(names[r.lhs], r.word, None if r.target is None else names[r.target]) for r in rules]
    return RightLinearGrammar([names[v] for v in used], alphabet, renamed, names[0])


def _language(alphabet, rules):
    return _indexed_grammar(alphabet, rules).to_dfa()


def _is_factor(word, text):
    n = len(word)
    return any(text[i:i + n] == word for i in range(len(text) - n + 1))


def _smallest_subsets(d, rules, limit, counter):
    letters = [(a,) for a in d.alphabet if d.accepts((a,))]
    needs_empty = d.accepts(())

    def missing(chosen):
        words = {rule.word for rule in chosen}
        count = sum(1 for letter in letters if letter not in words)
        if needs_empty and not any(rule.word == () and rule.terminating for rule in chosen):
            count += 1
        return count

    frontier = {frozenset()}
    for size in range(limit + 1):
        solutions = []
        next_frontier = set()
        for chosen in frontier:
            counter.tick('nodes')
            if missing(chosen) > limit - size:
                continue
            equal, missed = equivalent(_language(d.alphabet, chosen), d, return_witness=True)
            if equal:
                solutions.append(chosen)
                continue
            if size == limit:
                continue
            for rule in rules:
                if rule not in chosen and _is_factor(rule.word, missed):
                    next_frontier.add(chosen | {rule})
        if solutions:
            return size, solutions
        frontier = next_frontier
    return None, []


def _canonical_grammar(alphabet, rules):
    """Name the nonterminals so that the rule list is least in canonical order."""
    rank = {symbol: i for i, symbol in enumerate(alphabet)}
    others = sorted(({r.lhs for r in rules} | {r.target for r in rules if r.target is not None}) - {0})
    start = fresh_name('S', set(alphabet))
    taken = set(alphabet) | {start}
    pool = []
    for letter in 'ABCDEFGHIJKLMNOPQRTUVWXYZ':
        if len(pool) == len(others):
            break
        name = fresh_name(letter, taken)
        taken.add(name)
        pool.append(name)
    total = sum(len(r.word) for r in rules)
    best = None
    for permutation in itertools.permutations(range(1, len(others) + 1)):
        number = dict(zip(others, permutation))
        number[0] = 0
        ordered = sorted(
            (number[r.lhs], tuple(rank[s] for s in r.word), -1 if r.target is None else number[r.target], r)
            for r in rules
        )
        key = (len(rules), total, tuple(entry[:3] for entry in ordered))
        if best is None or key < best[0]:
            best = (key, number, [entry[3] for entry in ordered])
    _, number, ordered_rules = best
    names = [start] + pool
    renamed = [
        Rule(names[number[r.lhs]], r.word, None if r.target is None else names[number[r.target]])
        for r in ordered_rules
    ]
    return best[0], RightLinearGrammar(names[:len(others) + 1], alphabet, renamed, start)


def search_rlg(dfa, budget, cap=DEFAULT_SEARCH_CAP):
    """Search for the least right-linear grammar of L(dfa) within a budget.

    Parameters
    ----------
    dfa : Dfa
        The language.
    budget : Budget or triple
        ``(max_vars, max_prods, max_rhs_len)``.
    cap : int, optional
        The limit on maximal grammars plus rule subsets examined.

    Returns
    -------
    SearchResult
        The grammar is the least one under the ordering (number of rules,
        total word length, rules in lexicographic order), or None when no
        grammar within the budget generates L(dfa).

    Raises
    ------
    SearchSpaceExceeded
        If the search examines more than cap assignments and subsets.
    """
    budget = Budget(*budget)
    d = dfa.minimize()
    bodies = factors(d, budget.max_rhs_len)
    counter = _Counter(cap)
    if d.is_empty():
        start = fresh_name('S', set(d.alphabet))
        grammar = RightLinearGrammar([start], d.alphabet, [], start)
        return SearchResult(grammar, budget, len(bodies), 0, 0, 0)
    candidates = candidate_languages(d, cap)
    starts = [c for c in candidates if d.start in c]
    planned = sum(math.comb(len(candidates) - 1, min(budget.max_vars - 1, len(candidates) - 1)) for _ in starts)
    if planned > cap:
        raise SearchSpaceExceeded('{0} variable assignments exceed the cap of {1}.'.format(planned, cap))

    feasible = []
    for start_set in starts:
        others = [c for c in candidates if c != start_set]
        for combination in itertools.combinations(others, min(budget.max_vars - 1, len(others))):
            counter.tick('assignments')
            rules = _maximal_rules(d, (start_set,) + combination, bodies)
            if equivalent(_language(d.alphabet, rules), d):
                feasible.append(rules)
    LOGGER.debug('%d of %d variable assignments admit a grammar.', len(feasible), counter.assignments)

    best_size = None
    solutions = []
    for rules in feasible:
        limit = budget.max_prods if best_size is None else best_size
        size, found = _smallest_subsets(d, rules, limit, counter)
        if size is None:
            continue
        if best_size is None or size < best_size:
            best_size, solutions = size, found
        else:
            solutions.extend(found)
    grammar = None
    if solutions:
        grammar = min((_canonical_grammar(d.alphabet, s) for s in solutions), key=lambda kg: kg[0])[1]
    LOGGER.info('Grammar search within %s: %s after %d assignments and %d nodes.',
                budget, 'found' if grammar else 'none', counter.assignments, counter.nodes)
    return SearchResult(grammar, budget, len(bodies), len(candidates), counter.assignments, counter.nodes)
