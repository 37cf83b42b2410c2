import errno
import itertools
import os

import jinja2


_TEMPLATES = jinja2.Environment(
    loader=jinja2.PackageLoader('tcgtools', 'templates'),
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)


def safe_makedirs(path):
    """Recursively create a directory without race conditions.

    Parameters
    ----------
    path : path
        The path of the created directory.
    """
    try:
        os.makedirs(path)
    except OSError as e:
        if not (e.errno == errno.EEXIST and os.path.isdir(path)):
            raise


def render_template(name, **context):
    """Render one of the packaged jinja2 report templates."""
    _TEMPLATES.filters['word'] = format_word
    return _TEMPLATES.get_template(name).render(**context)


def format_word(word):
    """Render a word as space separated symbols, or λ for the empty word."""
    if not word:
        return 'λ'
    return ' '.join(word)


def parse_word(text):
    """Split a space separated word, accepting λ or an empty string for λ."""
    text = text.strip()
    if text in ('', 'λ', '%eps'):
        return ()
    return tuple(text.split())


def length_lex_key(alphabet):
    """Return a sort key ordering words by length, then by alphabet order.

    Parameters
    ----------
    alphabet : sequence of str
        The ordered alphabet.
    """
    rank = {symbol: i for i, symbol in enumerate(alphabet)}

    def key(word):
        return (len(word), tuple(rank[symbol] for symbol in word))

    return key


def fresh_name(base, taken):
    """Return base, or base with a numeric suffix, avoiding every name in taken."""
    if base not in taken:
        return base
    for i in itertools.count(1):
        candidate = '{0}_{1}'.format(base, i)
        if candidate not in taken:
            return candidate


def words_of_length(alphabet, length):
    """Yield every word of the given length in lexicographic alphabet order."""
    return itertools.product(alphabet, repeat=length)
