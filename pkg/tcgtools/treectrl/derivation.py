"""Level-synchronized derivations of tree-controlled grammars.

A configuration is the frontier of a partial derivation tree as a sequence
of cells. Active cells belong to the current level; frozen cells are
terminal leaves of shallower levels. The level word is the sequence of
active symbols and the sentential form is the sequence of all symbols.
"""
import collections
import itertools
import logging

from ..utils import length_lex_key
from .grammar import validate_tc


LOGGER = logging.getLogger(__name__)


class TreeControlError(Exception):
    pass


LevelConfigBase = collections.namedtuple(typename='LevelConfigBase', field_names=['cells', 'depth'])


class LevelConfig(LevelConfigBase):
    """A level configuration: ``(symbol, frozen)`` cells in frontier order."""
    __slots__ = ()

    @classmethod
    def initial(cls, core):
        return cls(((core.start, False),), 0)

    @property
    def level_word(self):
        return tuple(symbol for symbol, frozen in self.cells if not frozen)

    @property
    def sentential_form(self):
        return tuple(symbol for symbol, _ in self.cells)

    def active_nonterminals(self, core):
        """Positions of the active nonterminal cells."""
        return [i for i, (symbol, frozen) in enumerate(self.cells)
                if not frozen and core.is_nonterminal(symbol)]

    def is_final(self, core):
        return not self.active_nonterminals(core)


ChoiceBase = collections.namedtuple(typename='ChoiceBase', field_names=['position', 'nonterminal', 'body'])


class Choice(ChoiceBase):
    """The rule applied to the active nonterminal cell at position."""
    __slots__ = ()

    def __str__(self):
        return '{0}:{1}->{2}'.format(self.position, self.nonterminal, ' '.join(self.body) or 'λ')


DerivationTraceBase = collections.namedtuple(typename='DerivationTraceBase', field_names=['levels'])


class DerivationTrace(DerivationTraceBase):
    """A derivation tree level by level, each level an ordered tuple of choices."""
    __slots__ = ()

    def __new__(cls, levels):
        return super().__new__(cls, tuple(tuple(Choice(*c) for c in level) for level in levels))


CertificateBase = collections.namedtuple(typename='CertificateBase', field_names=['valid', 'diagnostic'])


class Certificate(CertificateBase):
    """The outcome of replaying a trace, truthy iff the trace is valid."""
    __slots__ = ()

    def __bool__(self):
        return self.valid


EnumerationResultBase = collections.namedtuple(
    typename='EnumerationResultBase', field_names=['words', 'traces', 'configs_explored', 'levels'],
)


class EnumerationResult(EnumerationResultBase):
    """The words found by :func:`tc_enumerate` with one certifying trace each.

    ``words`` is sorted length-then-lexicographically, ``configs_explored``
    counts the configurations expanded and ``levels`` is the deepest level
    reached.
    """
    __slots__ = ()


def _apply(cells, choices):
    bodies = {choice.position: choice.body for choice in choices}
    successor = []
    for position, (symbol, frozen) in enumerate(cells):
        if position in bodies:
            successor.extend((x, False) for x in bodies[position])
        else:
            successor.append((symbol, True))
    return tuple(successor)


def tc_step(config, core):
    """Return every successor of a configuration.

    Each active nonterminal is replaced by one of its bodies, whose symbols
    become active cells, and the active terminals are frozen.

    Raises
    ------
    TreeControlError
        If the configuration has no active nonterminal.
    """
    positions = config.active_nonterminals(core)
    if not positions:
        raise TreeControlError('A final configuration has no successors.')
    options = [
        [Choice(position, config.cells[position][0], body)
         for body in core.rules[config.cells[position][0]]]
        for position in positions
    ]
    return frozenset(
        LevelConfig(_apply(config.cells, choices), config.depth + 1)
        for choices in itertools.product(*options)
    )


class _Expander(object):
    """Generates the successors that can still pass the control check."""

    def __init__(self, core, control, max_len):
        self.core = core
        self.max_len = max_len
        self.delta = control.delta
        self.finals = control.finals
        self.live = control.live_states
        self.start = control.start
        self.index = {symbol: control.symbol_index(symbol) for symbol in core.symbols}
        self.bodies = {
            var: [(body, all(not core.is_nonterminal(x) for x in body), [self.index[x] for x in body])
                  for body in bodies]
            for var, bodies in core.rules.items()
        }
        self.shortest = {var: min((len(b) for b in bodies), default=0) for var, bodies in core.rules.items()}

    def successors(self, config):
        cells = config.cells
        positions = config.active_nonterminals(self.core)
        fixed = len(cells) - len(positions)
        rest = [0] * (len(positions) + 1)
        for i in reversed(range(len(positions))):
            rest[i] = rest[i + 1] + self.shortest[cells[positions[i]][0]]
        results = []
        chosen = [None] * len(positions)

        def expand(i, state, all_terminal, length):
            if i == len(positions):
                if all_terminal or state in self.finals:
                    choices = tuple(
                        Choice(position, cells[position][0], body) for position, body in zip(positions, chosen)
                    )
                    results.append((LevelConfig(_apply(cells, choices), config.depth + 1), choices))
                return
            var = cells[positions[i]][0]
            for body, terminal, columns in self.bodies[var]:
                size = length + len(body)
                if size + rest[i + 1] > self.max_len:
                    continue
                target = state
                for column in columns:
                    target = self.delta[target][column]
                if not (all_terminal and terminal) and target not in self.live:
                    continue
                chosen[i] = body
                expand(i + 1, target, all_terminal and terminal, size)

        if fixed + rest[0] <= self.max_len:
            expand(0, self.start, True, fixed)
        return results


def _trace(parents, cells):
    levels = []
    while parents[cells] is not None:
        cells, choices = parents[cells]
        levels.append(choices)
    return DerivationTrace(reversed(levels))


def tc_enumerate(grammar, max_len, max_depth=None):
    """Enumerate the words of a tree-controlled grammar up to a length.

    The search is breadth first over configurations with a visited set keyed
    by the full cell sequence. A configuration is expanded only if the
    control accepts its level word; a configuration without active
    nonterminals is the last level and contributes its word. Configurations
    longer than max_len are never built, as the core is non-erasing.

    Parameters
    ----------
    grammar : TcGrammar
        A grammar passing :func:`validate_tc`.
    max_len : int
        The longest word reported.
    max_depth : int, optional
        Do not expand configurations at this depth or deeper. The default is
        no limit.

    Returns
    -------
    EnumerationResult
    """
    violations = validate_tc(grammar)
    if violations:
        raise TreeControlError('Invalid TC grammar: {0}'.format('; '.join(violations)))
    core, control = grammar.core, grammar.control
    expander = _Expander(core, control, max_len)
    root = LevelConfig.initial(core)
    parents = {root.cells: None}
    queue = collections.deque([root])
    found = {}
    explored = levels = 0
    while queue:
        config = queue.popleft()
        levels = max(levels, config.depth)
        if config.is_final(core):
            word = config.sentential_form
            if len(word) <= max_len and word not in found:
                found[word] = _trace(parents, config.cells)
            continue
        if not control.accepts(config.level_word):
            continue
        if max_depth is not None and config.depth >= max_depth:
            continue
        explored += 1
        for successor, choices in expander.successors(config):
            if successor.cells not in parents:
                parents[successor.cells] = (config.cells, choices)
                queue.append(successor)
    LOGGER.info('Explored %d configurations over %d levels, %d words.', explored, levels, len(found))
    words = sorted(found, key=length_lex_key(core.terminals))
    return EnumerationResult(words, found, explored, levels)


def tc_certify(grammar, trace, word=None):
    """Replay a derivation trace and check it against the grammar.

    Parameters
    ----------
    grammar : TcGrammar
        The grammar.
    trace : DerivationTrace
        The levels of choices to replay from the start symbol.
    word : sequence of str, optional
        If given, the final configuration must spell this word.

    Returns
    -------
    Certificate
    """
    core, control = grammar.core, grammar.control
    config = LevelConfig.initial(core)
    for n, level in enumerate(trace.levels):
        active = config.active_nonterminals(core)
        if not active:
            return Certificate(False, 'level {0}: the configuration is already final'.format(n))
        if not all(symbol in control.index for symbol in config.level_word):
            return Certificate(False, 'level {0}: the level word leaves the control alphabet'.format(n))
        if not control.accepts(config.level_word):
            return Certificate(False, 'level {0}: the control rejects {1}'.format(n, ' '.join(config.level_word)))
        positions = [choice.position for choice in level]
        if any(not isinstance(p, int) or not 0 <= p < len(config.cells) for p in positions):
            return Certificate(False, 'level {0}: malformed position reference'.format(n))
        if sorted(positions) != active:
            return Certificate(False, 'level {0}: the choices do not cover the active nonterminals'.format(n))
        for choice in level:
            if config.cells[choice.position][0] != choice.nonterminal:
                return Certificate(False, 'level {0}: position {1} does not hold {2}'.format(
                    n, choice.position, choice.nonterminal))
            if tuple(choice.body) not in core.rules[choice.nonterminal]:
                return Certificate(False, 'level {0}: no rule {1} -> {2}'.format(
                    n, choice.nonterminal, ' '.join(choice.body) or 'λ'))
        cells = _apply(config.cells, level)
        if len(cells) < len(config.cells) and not (n == 0 and not cells):
            return Certificate(False, 'level {0}: the frontier shrank'.format(n))
        config = LevelConfig(cells, config.depth + 1)
    if not config.is_final(core):
        return Certificate(False, 'the last configuration still has active nonterminals')
    if word is not None and config.sentential_form != tuple(word):
        return Certificate(False, 'the trace derives {0}, not {1}'.format(
            ' '.join(config.sentential_form), ' '.join(word)))
    return Certificate(True, None)
