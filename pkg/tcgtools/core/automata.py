import collections
import logging

import cached_property


LOGGER = logging.getLogger(__name__)

#: Default cap on the number of states built by a subset construction.
DEFAULT_MAX_STATES = 10 ** 6

COMBINE_MODES = ('union', 'intersection', 'difference')


class AlphabetMismatchError(Exception):
    pass


class UnknownSymbolError(Exception):
    pass


class StateBudgetExceeded(Exception):
    pass


def check_alphabet(alphabet):
    """Validate an ordered alphabet and return it as a tuple of symbols."""
    alphabet = tuple(alphabet)
    if not alphabet:
        raise ValueError('An automaton alphabet must be non-empty.')
    if len(set(alphabet)) != len(alphabet):
        raise ValueError('The alphabet {0!r} contains duplicate symbols.'.format(alphabet))
    if any(not isinstance(symbol, str) or not symbol for symbol in alphabet):
        raise ValueError('Symbols must be non-empty strings, got {0!r}.'.format(alphabet))
    return alphabet


class Dfa(object):
    """A complete deterministic finite automaton.

    States are the integers ``0 .. n_states - 1``. The transition map is a
    table with one row per state and one column per alphabet symbol, so it
    is total by construction; languages that need one carry an explicit
    sink state.

    Parameters
    ----------
    alphabet : sequence of str
        The ordered, non-empty input alphabet.
    delta : sequence of sequences of int
        ``delta[q][i]`` is the successor of state q on ``alphabet[i]``.
    start : int
        The start state.
    finals : iterable of int
        The accepting states.
    """
    def __init__(self, alphabet, delta, start, finals):
        self.alphabet = check_alphabet(alphabet)
        self.delta = tuple(tuple(row) for row in delta)
        n_states = len(self.delta)
        if n_states == 0:
            raise ValueError('A DFA needs at least one state.')
        for row in self.delta:
            if len(row) != len(self.alphabet):
                raise ValueError('The transition map must be total over the alphabet.')
            if any(not 0 <= q < n_states for q in row):
                raise ValueError('Transition target out of range in {0!r}.'.format(row))
        if not 0 <= start < n_states:
            raise ValueError('The start state {0} is not a state.'.format(start))
        self.start = start
        self.finals = frozenset(finals)
        if any(not 0 <= q < n_states for q in self.finals):
            raise ValueError('The final states must be a subset of the states.')

    def __repr__(self):
        return 'Dfa(alphabet={0!r}, n_states={1}, start={2}, finals={3!r})'.format(
            self.alphabet, self.n_states, self.start, sorted(self.finals),
        )

    def __eq__(self, other):
        if not isinstance(other, Dfa):
            return NotImplemented
        return self._key() == other._key()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        return (self.alphabet, self.delta, self.start, self.finals)

    @classmethod
    def universal(cls, alphabet):
        """The one-state DFA accepting every word over alphabet."""
        alphabet = check_alphabet(alphabet)
        return cls(alphabet, [[0] * len(alphabet)], 0, [0])

    @classmethod
    def empty(cls, alphabet):
        """The one-state DFA rejecting every word over alphabet."""
        alphabet = check_alphabet(alphabet)
        return cls(alphabet, [[0] * len(alphabet)], 0, [])

    @classmethod
    def from_words(cls, alphabet, words):
        """The minimal DFA of a finite set of words."""
        alphabet = check_alphabet(alphabet)
        index = {symbol: i for i, symbol in enumerate(alphabet)}
        # State 0 is the sink, state 1 the root of the prefix tree.
        rows = [[0] * len(alphabet), [0] * len(alphabet)]
        finals = set()
        for word in words:
            state = 1
            for symbol in word:
                if symbol not in index:
                    raise UnknownSymbolError('Unknown symbol {0!r}.'.format(symbol))
                column = index[symbol]
                if rows[state][column] == 0:
                    rows.append([0] * len(alphabet))
                    rows[state][column] = len(rows) - 1
                state = rows[state][column]
            finals.add(state)
        return cls(alphabet, rows, 1, finals).minimize()

    @property
    def n_states(self):
        return len(self.delta)

    @cached_property.cached_property
    def index(self):
        """Map each symbol to its column in the transition table."""
        return {symbol: i for i, symbol in enumerate(self.alphabet)}

    def symbol_index(self, symbol):
        try:
            return self.index[symbol]
        except KeyError:
            raise UnknownSymbolError(
                'The symbol {0!r} is not in the alphabet {1!r}.'.format(symbol, self.alphabet)
            )

    def run(self, word, state=None):
        """Return the state reached by reading word from state (default: start)."""
        state = self.start if state is None else state
        for symbol in word:
            state = self.delta[state][self.symbol_index(symbol)]
        return state

    def accepts(self, word):
        return self.run(word) in self.finals

    @cached_property.cached_property
    def reachable_states(self):
        seen = {self.start}
        queue = collections.deque([self.start])
        while queue:
            for target in self.delta[queue.popleft()]:
                if target not in seen:
                    seen.add(target)
                    queue.append(target)
        return frozenset(seen)

    @cached_property.cached_property
    def live_states(self):
        """States from which some final state can be reached."""
        predecessors = collections.defaultdict(set)
        for q, row in enumerate(self.delta):
            for target in row:
                predecessors[target].add(q)
        seen = set(self.finals)
        queue = collections.deque(self.finals)
        while queue:
            for q in predecessors[queue.popleft()]:
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return frozenset(seen)

    def is_empty(self):
        return not (self.reachable_states & self.finals)

    def is_universal(self):
        return self.reachable_states <= self.finals

    def is_finite(self):
        """Return True if the language is finite.

        The language is infinite exactly when a cycle runs through states that
        are both reachable and live.
        """
        useful = self.reachable_states & self.live_states
        # Iterative three-colour depth-first search for a cycle.
        colour = dict.fromkeys(useful, 0)
        for root in useful:
            if colour[root]:
                continue
            colour[root] = 1
            stack = [(root, iter(self.delta[root]))]
            while stack:
                state, successors = stack[-1]
                for target in successors:
                    if target not in colour:
                        continue
                    if colour[target] == 1:
                        return False
                    if colour[target] == 0:
                        colour[target] = 1
                        stack.append((target, iter(self.delta[target])))
                        break
                else:
                    colour[state] = 2
                    stack.pop()
        return True

    def renumbered(self):
        """Canonically renumber the reachable part without merging states.

        The start state becomes 0 and the remaining states are numbered in
        breadth-first order over the alphabet order.
        """
        number = {self.start: 0}
        order = [self.start]
        for state in order:
            for target in self.delta[state]:
                if target not in number:
                    number[target] = len(order)
                    order.append(target)
        delta = [[number[target] for target in self.delta[state]] for state in order]
        finals = [number[state] for state in order if state in self.finals]
        return Dfa(self.alphabet, delta, 0, finals)

    def minimize(self):
        """Return the minimal, canonically numbered DFA of the same language."""
        states = sorted(self.reachable_states)
        block = {q: int(q in self.finals) for q in states}
        n_blocks = len(set(block.values()))
        while True:
            signatures = {}
            refined = {}
            for q in states:
                signature = (block[q],) + tuple(block[target] for target in self.delta[q])
                refined[q] = signatures.setdefault(signature, len(signatures))
            block = refined
            if len(signatures) == n_blocks:
                break
            n_blocks = len(signatures)
        representative = {}
        for q in states:
            representative.setdefault(block[q], q)
        quotient = Dfa(
            self.alphabet,
            [[block[target] for target in self.delta[representative[b]]] for b in range(n_blocks)],
            block[self.start],
            {block[q] for q in self.finals if q in block},
        )
        return quotient.renumbered()

    def lift(self, alphabet):
        """Re-express the DFA over a superset alphabet, in that alphabet's order.

        Symbols new to the automaton lead to a fresh sink state.
        """
        alphabet = check_alphabet(alphabet)
        missing = set(self.alphabet) - set(alphabet)
        if missing:
            raise AlphabetMismatchError(
                'The alphabet {0!r} lacks the symbols {1!r}.'.format(alphabet, sorted(missing))
            )
        sink = self.n_states
        delta = []
        for row in self.delta:
            delta.append([row[self.index[s]] if s in self.index else sink for s in alphabet])
        delta.append([sink] * len(alphabet))
        return Dfa(alphabet, delta, self.start, self.finals).minimize()

    def to_nfa(self):
        transitions = {}
        for q, row in enumerate(self.delta):
            for symbol, target in zip(self.alphabet, row):
                transitions[(q, symbol)] = {target}
        return Nfa(self.alphabet, self.n_states, [self.start], self.finals, transitions)


class Nfa(object):
    """A nondeterministic finite automaton with λ-moves.

    Parameters
    ----------
    alphabet : sequence of str
        The ordered, non-empty input alphabet.
    n_states : int
        States are the integers ``0 .. n_states - 1``.
    starts : iterable of int
        The initial states.
    finals : iterable of int
        The accepting states.
    transitions : mapping
        Maps ``(state, symbol)`` to an iterable of target states. The symbol
        None labels a λ-move.
    """
    def __init__(self, alphabet, n_states, starts, finals, transitions):
        self.alphabet = check_alphabet(alphabet)
        self.n_states = n_states
        self.starts = frozenset(starts)
        self.finals = frozenset(finals)
        states = range(n_states)
        if not (self.starts <= set(states) and self.finals <= set(states)):
            raise ValueError('The start and final states must be states.')
        self.transitions = {}
        for (state, symbol), targets in transitions.items():
            targets = frozenset(targets)
            if state not in states or not targets <= set(states):
                raise ValueError('Transition {0!r} refers to unknown states.'.format((state, symbol)))
            if symbol is not None and symbol not in self.alphabet:
                raise UnknownSymbolError(
                    'The symbol {0!r} is not in the alphabet {1!r}.'.format(symbol, self.alphabet)
                )
            if targets:
                self.transitions[(state, symbol)] = targets

    def __repr__(self):
        return 'Nfa(alphabet={0!r}, n_states={1}, starts={2!r}, finals={3!r})'.format(
            self.alphabet, self.n_states, sorted(self.starts), sorted(self.finals),
        )

    def __eq__(self, other):
        if not isinstance(other, Nfa):
            return NotImplemented
        return self._key() == other._key()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        return (self.alphabet, self.n_states, self.starts, self.finals,
                frozenset(self.transitions.items()))

    @cached_property.cached_property
    def _closures(self):
        closures = []
        for state in range(self.n_states):
            seen = {state}
            stack = [state]
            while stack:
                for target in self.transitions.get((stack.pop(), None), ()):
                    if target not in seen:
                        seen.add(target)
                        stack.append(target)
            closures.append(frozenset(seen))
        return closures

    def epsilon_closure(self, states):
        closure = set()
        for state in states:
            closure |= self._closures[state]
        return frozenset(closure)

    def step(self, states, symbol):
        """Return the λ-closed set of states reached from states on symbol."""
        targets = set()
        for state in states:
            targets |= self.transitions.get((state, symbol), frozenset())
        return self.epsilon_closure(targets)

    def accepts(self, word):
        states = self.epsilon_closure(self.starts)
        for symbol in word:
            if symbol not in self.alphabet:
                raise UnknownSymbolError('The symbol {0!r} is not in the alphabet.'.format(symbol))
            states = self.step(states, symbol)
        return bool(states & self.finals)

    def reversed(self):
        """The NFA of the reversed language."""
        transitions = collections.defaultdict(set)
        for (state, symbol), targets in self.transitions.items():
            for target in targets:
                transitions[(target, symbol)].add(state)
        return Nfa(self.alphabet, self.n_states, self.finals, self.starts, transitions)

    def determinize(self, max_states=DEFAULT_MAX_STATES):
        """Run the subset construction over the reachable subsets.

        Raises
        ------
        StateBudgetExceeded
            If more than max_states subsets are reachable.
        """
        start = self.epsilon_closure(self.starts)
        number = {start: 0}
        order = [start]
        delta = []
        for subset in order:
            row = []
            for symbol in self.alphabet:
                target = self.step(subset, symbol)
                if target not in number:
                    if len(order) >= max_states:
                        raise StateBudgetExceeded(
                            'The subset construction exceeded {0} states.'.format(max_states)
                        )
                    number[target] = len(order)
                    order.append(target)
                row.append(number[target])
            delta.append(row)
        LOGGER.debug('Subset construction built %d states from %d.', len(order), self.n_states)
        finals = [number[subset] for subset in order if subset & self.finals]
        return Dfa(self.alphabet, delta, 0, finals)


def determinize_minimize(nfa, max_states=DEFAULT_MAX_STATES):
    """Return the minimal canonical DFA of an NFA's language."""
    return nfa.determinize(max_states).minimize()


def minimize_by_reversal(nfa, max_states=DEFAULT_MAX_STATES):
    """Minimize by determinizing the reversal twice.

    Only the final renumbering is shared with :meth:`Dfa.minimize`; no
    partition refinement takes place.
    """
    backward = nfa.reversed().determinize(max_states)
    return backward.to_nfa().reversed().determinize(max_states).renumbered()


def align(a, b):
    """Return b re-expressed in the symbol order of a.

    Raises
    ------
    AlphabetMismatchError
        If the two automata are over different symbol sets.
    """
    if a.alphabet == b.alphabet:
        return b
    if set(a.alphabet) != set(b.alphabet):
        raise AlphabetMismatchError(
            'The alphabets {0!r} and {1!r} differ.'.format(a.alphabet, b.alphabet)
        )
    columns = [b.index[symbol] for symbol in a.alphabet]
    delta = [[row[i] for i in columns] for row in b.delta]
    return Dfa(a.alphabet, delta, b.start, b.finals)


def _product(a, b, accepting):
    b = align(a, b)
    start = (a.start, b.start)
    number = {start: 0}
    order = [start]
    delta = []
    for p, q in order:
        row = []
        for target in zip(a.delta[p], b.delta[q]):
            if target not in number:
                number[target] = len(order)
                order.append(target)
            row.append(number[target])
        delta.append(row)
    finals = [number[pair] for pair in order
              if accepting(pair[0] in a.finals, pair[1] in b.finals)]
    return Dfa(a.alphabet, delta, 0, finals)


def combine(a, b, mode):
    """Return the minimal DFA of a boolean combination of two languages.

    Parameters
    ----------
    a, b : Dfa
        DFAs over the same alphabet.
    mode : {'union', 'intersection', 'difference'}
        The set operation; difference is L(a) minus L(b).
    """
    if mode == 'union':
        accepting = lambda x, y: x or y
    elif mode == 'intersection':
        accepting = lambda x, y: x and y
    elif mode == 'difference':
        accepting = lambda x, y: x and not y
    else:
        raise ValueError('Unknown combination mode {0!r}, expected one of {1}.'.format(mode, COMBINE_MODES))
    return _product(a, b, accepting).minimize()


def complement(a):
    complemented = Dfa(a.alphabet, a.delta, a.start, set(range(a.n_states)) - a.finals)
    return complemented.minimize()


def shortest_word(d):
    """Return the length-lexicographically least accepted word, or None."""
    parent = {d.start: None}
    queue = collections.deque([d.start])
    while queue:
        state = queue.popleft()
        if state in d.finals:
            word = []
            while parent[state] is not None:
                state, symbol = parent[state]
                word.append(symbol)
            return tuple(reversed(word))
        for symbol, target in zip(d.alphabet, d.delta[state]):
            if target not in parent:
                parent[target] = (state, symbol)
                queue.append(target)
    return None


def equivalent(a, b, return_witness=False):
    """Decide whether two DFAs accept the same language.

    Parameters
    ----------
    a, b : Dfa
        DFAs over the same alphabet.
    return_witness : bool, optional
        If True, return a pair ``(equal, word)`` where word is a shortest
        distinguishing word (least in alphabet order among the shortest),
        or None when the languages are equal.
    """
    differs = _product(a, b, lambda x, y: x != y)
    witness = shortest_word(differs)
    if return_witness:
        return witness is None, witness
    return witness is None


def included(a, b):
    """Return True if L(a) is a subset of L(b)."""
    return combine(a, b, 'difference').is_empty()


def enumerate_dfa(d, max_len):
    """List the accepted words of length at most max_len.

    The words come in length-then-lexicographic order over the alphabet order.
    """
    live = d.live_states
    words = []
    layer = [((), d.start)] if d.start in live else []
    for length in range(max_len + 1):
        words.extend(word for word, state in layer if state in d.finals)
        if length == max_len:
            break
        layer = [
            (word + (symbol,), target)
            for word, state in layer
            for symbol, target in zip(d.alphabet, d.delta[state])
            if target in live
        ]
    return words


def suffix_language(d):
    """Return the minimal DFA of all suffixes of words of L(d)."""
    nfa = Nfa(d.alphabet, d.n_states, d.reachable_states, d.finals, d.to_nfa().transitions)
    return determinize_minimize(nfa)


def is_suffix_closed(d):
    return included(suffix_language(d), d)
