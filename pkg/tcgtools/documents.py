"""Workspace documents.

A document is a UTF-8 JSON object with the fields ``format`` (currently 1),
``kind`` and ``alphabet`` plus kind-specific sections. Words are lists of
symbols, so multi-character symbols need no separator.

=========  ============================================  =====================
kind       sections                                      object
=========  ============================================  =====================
dfa        states, start, finals, delta                  Dfa
nfa        states, starts, finals, transitions           Nfa
rlg        vars, start, rules (lhs, word, target)        RightLinearGrammar
regex      regex (concrete syntax)                       RegularExpression
slt        k, B, I, E, F                                 SltDescription
cfg        vars, start, rules (lhs, body)                Cfg
monotone   vars, start, rules (lhs, rhs)                 MonotoneGrammar
kuroda     vars, start, rules (lhs, rhs)                 KurodaGrammar
tc         core (a cfg section), control (a document)    TcGrammar
trace      levels (position, nonterminal, body)          DerivationTrace
report     report (name), body                           dict
=========  ============================================  =====================

For cfg, monotone, kuroda and tc documents the alphabet is the terminal
alphabet; for trace documents it may be empty. The control of a tc document
is a nested dfa, regex, rlg or slt document over the core's symbols,
without its own ``format`` field.
"""
import json
import logging

from .core.automata import Dfa, Nfa
from .core.grammars import RightLinearGrammar, Rule
from .core.measures import to_dfa
from .core.regex import RegularExpression
from .subregular.slt import SltDescription
from .transforms.kuroda import KurodaGrammar, MonotoneGrammar
from .treectrl.derivation import DerivationTrace
from .treectrl.grammar import Cfg, TcGrammar


LOGGER = logging.getLogger(__name__)

FORMAT_VERSION = 1

KINDS = ('dfa', 'nfa', 'rlg', 'regex', 'slt', 'cfg', 'monotone', 'kuroda', 'tc', 'trace', 'report')

CONTROL_KINDS = ('dfa', 'regex', 'rlg', 'slt')


class DocumentFormatError(Exception):
    pass


def _words(words):
    return [list(word) for word in words]


def _encode_dfa(dfa):
    return {'states': dfa.n_states, 'start': dfa.start, 'finals': sorted(dfa.finals),
            'delta': [list(row) for row in dfa.delta]}


def _decode_dfa(alphabet, body):
    return Dfa(alphabet, body['delta'], body['start'], body['finals'])


def _encode_nfa(nfa):
    transitions = [
        {'from': state, 'symbol': symbol, 'to': sorted(targets)}
        for (state, symbol), targets in sorted(nfa.transitions.items(), key=lambda item: (item[0][0], item[0][1] or ''))
    ]
    return {'states': nfa.n_states, 'starts': sorted(nfa.starts), 'finals': sorted(nfa.finals),
            'transitions': transitions}


def _decode_nfa(alphabet, body):
    transitions = {}
    for item in body['transitions']:
        transitions.setdefault((item['from'], item['symbol']), set()).update(item['to'])
    return Nfa(alphabet, body['states'], body['starts'], body['finals'], transitions)


def _encode_rlg(grammar):
    return {'vars': list(grammar.vars), 'start': grammar.start,
            'rules': [{'lhs': r.lhs, 'word': list(r.word), 'target': r.target} for r in grammar.rules]}


def _decode_rlg(alphabet, body):
    rules = [Rule(r['lhs'], r['word'], r.get('target')) for r in body['rules']]
    return RightLinearGrammar(body['vars'], alphabet, rules, body['start'])


def _encode_regex(expr):
    return {'regex': str(expr)}


def _decode_regex(alphabet, body):
    return RegularExpression.from_text(body['regex'], alphabet)


def _encode_slt(desc):
    encoded = {'k': desc.k}
    for name in 'BIEF':
        encoded[name] = _words(desc.sorted_words(name))
    return encoded


def _decode_slt(alphabet, body):
    return SltDescription(body['k'], alphabet, **{name: body.get(name, []) for name in 'BIEF'})


def _encode_cfg(core):
    return {'vars': list(core.vars), 'start': core.start,
            'rules': [{'lhs': lhs, 'body': list(body)} for lhs, body in core.pairs()]}


def _decode_cfg(alphabet, body):
    rules = [(r['lhs'], r['body']) for r in body['rules']]
    return Cfg(body['vars'], alphabet, rules, body['start'])


def _encode_monotone(grammar):
    return {'vars': list(grammar.vars), 'start': grammar.start,
            'rules': [{'lhs': list(lhs), 'rhs': list(rhs)} for lhs, rhs in grammar.rules]}


def _decoder_of_monotone(cls):
    def decode(alphabet, body):
        rules = [(r['lhs'], r['rhs']) for r in body['rules']]
        return cls(body['vars'], alphabet, rules, body['start'])
    return decode


def _encode_tc(grammar):
    control = grammar.control
    return {'core': _encode_cfg(grammar.core), 'control': dict(kind='dfa', alphabet=list(control.alphabet),
                                                             **_encode_dfa(control))}


def _decode_tc(alphabet, body):
    core = _decode_cfg(alphabet, body['core'])
    control = from_document(body['control'], nested=True)
    if not isinstance(control, Dfa):
        control = to_dfa(control)
    return TcGrammar(core, control)


def _encode_trace(trace):
    return {'levels': [
        [{'position': c.position, 'nonterminal': c.nonterminal, 'body': list(c.body)} for c in level]
        for level in trace.levels
    ]}


def _decode_trace(alphabet, body):
    return DerivationTrace(
        [(c['position'], c['nonterminal'], tuple(c['body'])) for c in level] for level in body['levels']
    )


_CODECS = {
    'dfa': (Dfa, lambda x: x.alphabet, _encode_dfa, _decode_dfa),
    'nfa': (Nfa, lambda x: x.alphabet, _encode_nfa, _decode_nfa),
    'rlg': (RightLinearGrammar, lambda x: x.terminals, _encode_rlg, _decode_rlg),
    'regex': (RegularExpression, lambda x: x.alphabet, _encode_regex, _decode_regex),
    'slt': (SltDescription, lambda x: x.alphabet, _encode_slt, _decode_slt),
    'cfg': (Cfg, lambda x: x.terminals, _encode_cfg, _decode_cfg),
    'kuroda': (KurodaGrammar, lambda x: x.terminals, _encode_monotone, _decoder_of_monotone(KurodaGrammar)),
    'monotone': (MonotoneGrammar, lambda x: x.terminals, _encode_monotone, _decoder_of_monotone(MonotoneGrammar)),
    'tc': (TcGrammar, lambda x: x.core.terminals, _encode_tc, _decode_tc),
    'trace': (DerivationTrace, lambda x: (), _encode_trace, _decode_trace),
}


def kind_of(obj):
    """Return the document kind of an object."""
    for kind, (cls, _, _, _) in _CODECS.items():
        if type(obj) is cls:
            return kind
    for kind, (cls, _, _, _) in _CODECS.items():
        if isinstance(obj, cls):
            return kind
    raise DocumentFormatError('No document kind for {0!r}.'.format(type(obj).__name__))


def to_document(obj):
    """Convert a workspace object into a document dictionary."""
    kind = kind_of(obj)
    _, alphabet_of, encode, _ = _CODECS[kind]
    document = {'format': FORMAT_VERSION, 'kind': kind, 'alphabet': list(alphabet_of(obj))}
    document.update(encode(obj))
    return document


def report_document(name, body):
    """Wrap a report body, as built by the report_to_document functions, into a document."""
    return {'format': FORMAT_VERSION, 'kind': 'report', 'alphabet': [], 'report': name, 'body': body}


def from_document(document, nested=False):
    """Build the object described by a document dictionary.

    Report documents are returned unchanged.

    Raises
    ------
    DocumentFormatError
        If the format version, the kind or a required section is wrong.
    """
    if not isinstance(document, dict):
        raise DocumentFormatError('A document must be a JSON object.')
    if not nested and document.get('format') != FORMAT_VERSION:
        raise DocumentFormatError('Unsupported document format {0!r}, expected {1}.'.format(
            document.get('format'), FORMAT_VERSION))
    kind = document.get('kind')
    if kind == 'report':
        return document
    if kind not in _CODECS:
        raise DocumentFormatError('Unknown document kind {0!r}, expected one of {1}.'.format(kind, ', '.join(KINDS)))
    if nested and kind not in CONTROL_KINDS:
        raise DocumentFormatError('A control must be one of {0}, got {1!r}.'.format(', '.join(CONTROL_KINDS), kind))
    _, _, _, decode = _CODECS[kind]
    try:
        return decode(tuple(document.get('alphabet', ())), document)
    except (KeyError, TypeError, ValueError) as e:
        raise DocumentFormatError('Malformed {0} document: {1!r}'.format(kind, e))


def dumps(obj):
    """Serialize an object, or a report document dictionary, to JSON text."""
    document = obj if isinstance(obj, dict) else to_document(obj)
    return json.dumps(document, indent=2, ensure_ascii=False) + '\n'


def loads(text):
    try:
        document = json.loads(text)
    except ValueError as e:
        raise DocumentFormatError('Invalid JSON: {0}'.format(e))
    return from_document(document)


def load(path):
    """Read a document file and return its object."""
    with open(path, encoding='utf-8') as f:
        obj = loads(f.read())
    LOGGER.debug('Loaded a %s document from %s', kind_of(obj) if not isinstance(obj, dict) else 'report', path)
    return obj


def dump(obj, path):
    """Write an object or a report document dictionary to a document file."""
    with open(path, 'w', encoding='utf-8') as f:
        f.write(dumps(obj))
    LOGGER.debug('Wrote %s', path)
