"""Regular expressions over named symbols.

Concrete syntax
---------------
Symbols are identifier tokens: any run of characters other than whitespace
and ``( ) . | * %``. Juxtaposition or ``.`` is concatenation, ``|`` is union,
a postfix ``*`` is the Kleene star, parentheses group, ``%empty`` denotes the
empty language and ``%eps`` the empty word. Whitespace is insignificant
except that it separates identifiers.

When an alphabet is supplied, an identifier that is not itself a symbol is
split into alphabet symbols, longest symbol first, and a following star binds
only to the last of them. Over the alphabet ``(a, b)`` the text ``ab*a|a``
therefore reads as ``a b* a | a``.
"""
import collections
import logging

from .automata import DEFAULT_MAX_STATES, Nfa, UnknownSymbolError, check_alphabet, determinize_minimize


LOGGER = logging.getLogger(__name__)

_SPECIALS = frozenset('().|*%')


class RegexSyntaxError(Exception):
    """A malformed regular expression; ``position`` is the offending offset."""
    def __init__(self, message, position):
        super().__init__('{0} at position {1}'.format(message, position))
        self.position = position


class Regex(object):
    """Base class of regular expression nodes."""
    __slots__ = ()
    precedence = 3

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        return self._fields() == other._fields()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((type(self).__name__,) + self._fields())

    def __repr__(self):
        return '{0}({1})'.format(type(self).__name__, ', '.join(repr(f) for f in self._fields()))

    def _fields(self):
        return tuple(getattr(self, name) for name in self.__slots__)

    def children(self):
        return ()

    def nodes(self):
        """Yield every node of the tree in pre-order."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children()))

    def count(self, kind):
        return sum(1 for node in self.nodes() if isinstance(node, kind))

    def is_union_free(self):
        return self.count(Union) == 0

    def symbols(self):
        """The literal symbols in order of first appearance."""
        seen = collections.OrderedDict()
        for node in self.nodes():
            if isinstance(node, Literal):
                seen[node.symbol] = None
        return tuple(seen)

    def to_nfa(self, alphabet):
        """Build the Thompson NFA of the expression over alphabet."""
        alphabet = check_alphabet(alphabet)
        unknown = set(self.symbols()) - set(alphabet)
        if unknown:
            raise UnknownSymbolError('Unknown symbols {0!r} for the alphabet {1!r}.'.format(
                sorted(unknown), alphabet))
        builder = _ThompsonBuilder()
        start, end = builder.build(self)
        return Nfa(alphabet, builder.n_states, [start], [end], builder.transitions)

    def _wrap(self, node, minimum):
        text = str(node)
        return '({0})'.format(text) if node.precedence < minimum else text


class Empty(Regex):
    __slots__ = ()

    def __str__(self):
        return '%empty'


class Literal(Regex):
    __slots__ = ('symbol',)

    def __init__(self, symbol):
        self.symbol = symbol

    def __str__(self):
        return self.symbol


class Concat(Regex):
    __slots__ = ('left', 'right')
    precedence = 1

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def children(self):
        return (self.left, self.right)

    def __str__(self):
        return '{0} {1}'.format(self._wrap(self.left, 1), self._wrap(self.right, 2))


class Union(Regex):
    __slots__ = ('left', 'right')
    precedence = 0

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def children(self):
        return (self.left, self.right)

    def __str__(self):
        return '{0} | {1}'.format(self._wrap(self.left, 0), self._wrap(self.right, 1))


class Star(Regex):
    __slots__ = ('inner',)
    precedence = 2

    def __init__(self, inner):
        self.inner = inner

    def children(self):
        return (self.inner,)

    def __str__(self):
        if isinstance(self.inner, Empty):
            return '%eps'
        return '{0}*'.format(self._wrap(self.inner, 2))


def epsilon():
    """The expression of the empty word."""
    return Star(Empty())


def concat_all(nodes):
    """Left-nested concatenation of nodes; the empty word for no nodes."""
    nodes = list(nodes)
    if not nodes:
        return epsilon()
    result = nodes[0]
    for node in nodes[1:]:
        result = Concat(result, node)
    return result


def union_all(nodes):
    """Left-nested union of nodes; the empty language for no nodes."""
    nodes = list(nodes)
    if not nodes:
        return Empty()
    result = nodes[0]
    for node in nodes[1:]:
        result = Union(result, node)
    return result


def word_regex(word):
    return concat_all(Literal(symbol) for symbol in word)


class _ThompsonBuilder(object):

    def __init__(self):
        self.n_states = 0
        self.transitions = collections.defaultdict(set)

    def _new_state(self):
        self.n_states += 1
        return self.n_states - 1

    def build(self, node):
        start, end = self._new_state(), self._new_state()
        if isinstance(node, Literal):
            self.transitions[(start, node.symbol)].add(end)
        elif isinstance(node, Concat):
            left_start, left_end = self.build(node.left)
            right_start, right_end = self.build(node.right)
            self.transitions[(start, None)].add(left_start)
            self.transitions[(left_end, None)].add(right_start)
            self.transitions[(right_end, None)].add(end)
        elif isinstance(node, Union):
            for branch in (node.left, node.right):
                branch_start, branch_end = self.build(branch)
                self.transitions[(start, None)].add(branch_start)
                self.transitions[(branch_end, None)].add(end)
        elif isinstance(node, Star):
            inner_start, inner_end = self.build(node.inner)
            self.transitions[(start, None)].update((inner_start, end))
            self.transitions[(inner_end, None)].update((inner_start, end))
        elif not isinstance(node, Empty):
            raise TypeError('Not a regular expression node: {0!r}'.format(node))
        return start, end


Token = collections.namedtuple('Token', ['kind', 'text', 'position'])


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        char = text[i]
        if char.isspace():
            i += 1
        elif char == '%':
            j = i + 1
            while j < len(text) and not text[j].isspace() and text[j] not in _SPECIALS:
                j += 1
            keyword = text[i:j]
            if keyword not in ('%empty', '%eps'):
                raise RegexSyntaxError('Unknown keyword {0!r}'.format(keyword), i)
            tokens.append(Token(keyword[1:], keyword, i))
            i = j
        elif char in _SPECIALS:
            tokens.append(Token(char, char, i))
            i += 1
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in _SPECIALS:
                j += 1
            tokens.append(Token('ident', text[i:j], i))
            i = j
    tokens.append(Token('end', '', len(text)))
    return tokens


def _split_identifier(token, alphabet):
    """Split an identifier into alphabet symbols, preferring longer symbols."""
    if alphabet is None or token.text in alphabet:
        return [token.text]
    candidates = sorted(alphabet, key=len, reverse=True)
    failed = set()

    def split_from(i):
        if i == len(token.text):
            return []
        if i in failed:
            return None
        for symbol in candidates:
            if token.text.startswith(symbol, i):
                rest = split_from(i + len(symbol))
                if rest is not None:
                    return [symbol] + rest
        failed.add(i)
        return None

    pieces = split_from(0)
    if pieces is None:
        raise UnknownSymbolError('Unknown symbol {0!r} at position {1}'.format(token.text, token.position))
    return pieces


class _Parser(object):

    def __init__(self, text, alphabet):
        self.tokens = _tokenize(text)
        self.alphabet = alphabet
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        token = self.tokens[self.i]
        self.i += 1
        return token

    def parse(self):
        node = self.parse_union()
        token = self.peek()
        if token.kind != 'end':
            raise RegexSyntaxError('Unexpected {0!r}'.format(token.text), token.position)
        return node

    def parse_union(self):
        node = self.parse_concat()
        while self.peek().kind == '|':
            self.advance()
            node = Union(node, self.parse_concat())
        return node

    def parse_concat(self):
        parts = self.parse_factor()
        while True:
            kind = self.peek().kind
            if kind == '.':
                self.advance()
                parts.extend(self.parse_factor())
            elif kind in ('ident', '(', 'empty', 'eps'):
                parts.extend(self.parse_factor())
            else:
                break
        return concat_all(parts)

    def parse_factor(self):
        token = self.advance()
        if token.kind == 'ident':
            nodes = [Literal(symbol) for symbol in _split_identifier(token, self.alphabet)]
        elif token.kind == '(':
            nodes = [self.parse_union()]
            closing = self.advance()
            if closing.kind != ')':
                raise RegexSyntaxError('Expected \')\'', closing.position)
        elif token.kind == 'empty':
            nodes = [Empty()]
        elif token.kind == 'eps':
            nodes = [epsilon()]
        else:
            raise RegexSyntaxError('Expected an expression', token.position)
        while self.peek().kind == '*':
            self.advance()
            nodes[-1] = Star(nodes[-1])
        return nodes


def parse_regex(text, alphabet=None):
    """Parse the concrete syntax into a :class:`Regex` tree.

    Raises
    ------
    RegexSyntaxError
        If the text is malformed.
    UnknownSymbolError
        If an alphabet is given and an identifier cannot be split into its symbols.
    """
    if alphabet is not None:
        alphabet = check_alphabet(alphabet)
    return _Parser(text, alphabet).parse()


class RegularExpression(object):
    """A regular expression tree together with the alphabet it is read over."""

    def __init__(self, tree, alphabet=None):
        self.tree = tree
        if alphabet is None:
            alphabet = tree.symbols()
        self.alphabet = check_alphabet(alphabet)
        unknown = set(tree.symbols()) - set(self.alphabet)
        if unknown:
            raise UnknownSymbolError('Unknown symbols {0!r}.'.format(sorted(unknown)))

    @classmethod
    def from_text(cls, text, alphabet=None):
        return cls(parse_regex(text, alphabet), alphabet)

    def __str__(self):
        return str(self.tree)

    def __repr__(self):
        return 'RegularExpression({0!r}, alphabet={1!r})'.format(str(self.tree), self.alphabet)

    def __eq__(self, other):
        if not isinstance(other, RegularExpression):
            return NotImplemented
        return (self.tree, self.alphabet) == (other.tree, other.alphabet)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.tree, self.alphabet))

    def to_dfa(self, max_states=DEFAULT_MAX_STATES):
        return determinize_minimize(self.tree.to_nfa(self.alphabet), max_states)


def compile_regex(expr, alphabet=None, max_states=DEFAULT_MAX_STATES):
    """Compile a regular expression into its minimal canonical DFA.

    Parameters
    ----------
    expr : str, Regex or RegularExpression
        The expression, as concrete syntax or as a tree.
    alphabet : sequence of str, optional
        The alphabet. The default is the expression's own symbols in order
        of appearance, which must then be non-empty.
    max_states : int, optional
        The cap on subset construction states.
    """
    if isinstance(expr, RegularExpression):
        if alphabet is None:
            return expr.to_dfa(max_states)
        expr = expr.tree
    if isinstance(expr, str):
        expr = parse_regex(expr, alphabet)
    return RegularExpression(expr, alphabet).to_dfa(max_states)
