import json

import pytest

from tcgtools import documents
from tcgtools.core.automata import Dfa, equivalent
from tcgtools.core.grammars import dfa_to_rlg
from tcgtools.core.regex import RegularExpression
from tcgtools.subregular.slt import SltDescription
from tcgtools.transforms.kuroda import monotone_to_kuroda
from tcgtools.treectrl.derivation import tc_enumerate
from tcgtools.treectrl.grammar import TcGrammar


def _objects(l1, g2, abc_grammar):
    regex = RegularExpression.from_text('a*b(a|b)*', ('a', 'b'))
    return [
        l1,
        regex.tree.to_nfa(('a', 'b')),
        dfa_to_rlg(l1),
        regex,
        SltDescription(1, ('a', 'b', 'c'), B=['a', 'b'], I=['b', 'c'], E=['a', 'c'], F=[()]),
        g2.core,
        abc_grammar,
        monotone_to_kuroda(abc_grammar),
        g2,
        tc_enumerate(g2, 6).traces[tuple('aabbcc')],
    ]


def test_every_kind_reloads(l1, g2, abc_grammar):
    kinds = []
    for obj in _objects(l1, g2, abc_grammar):
        text = documents.dumps(obj)
        again = documents.loads(text)
        assert type(again) is type(obj)
        assert documents.dumps(again) == text
        kinds.append(json.loads(text)['kind'])
    assert kinds == ['dfa', 'nfa', 'rlg', 'regex', 'slt', 'cfg', 'monotone', 'kuroda', 'tc', 'trace']


def test_multi_character_symbols():
    dfa = Dfa.from_words(('a1', 'a2'), [('a1', 'a2')])
    document = documents.to_document(dfa)
    assert document['alphabet'] == ['a1', 'a2']
    assert equivalent(documents.from_document(document), dfa)


def test_tc_with_a_regex_control(g2):
    document = documents.to_document(g2)
    document['control'] = {'kind': 'regex', 'alphabet': list(g2.core.symbols), 'regex': 'S | a A b B c C'}
    grammar = documents.from_document(document)
    assert isinstance(grammar, TcGrammar)
    assert equivalent(grammar.control, g2.control)


def test_control_kind_is_checked(g2):
    document = documents.to_document(g2)
    document['control'] = documents.to_document(g2.core)
    with pytest.raises(documents.DocumentFormatError):
        documents.from_document(document)


def test_report_documents(tmp_path):
    document = documents.report_document('witness', {'green': True})
    path = str(tmp_path / 'report.json')
    documents.dump(document, path)
    assert documents.load(path) == document


def test_files(tmp_path, l1):
    path = str(tmp_path / 'l1.json')
    documents.dump(l1, path)
    assert documents.load(path) == l1


@pytest.mark.parametrize('document', [
    {'format': 2, 'kind': 'dfa', 'alphabet': ['a']},
    {'format': 1, 'kind': 'pda', 'alphabet': ['a']},
    {'format': 1, 'kind': 'dfa', 'alphabet': ['a'], 'states': 1, 'start': 0, 'finals': []},
    {'format': 1, 'kind': 'dfa', 'alphabet': ['a'], 'states': 1, 'start': 0, 'finals': [], 'delta': [[]]},
    {'format': 1, 'kind': 'slt', 'alphabet': ['a'], 'B': [['a']]},
    ['not', 'an', 'object'],
])
def test_malformed_documents(document):
    with pytest.raises(documents.DocumentFormatError):
        documents.from_document(document)


def test_invalid_json():
    with pytest.raises(documents.DocumentFormatError):
        documents.loads('{"format": 1,')


def test_no_kind_for_other_objects():
    with pytest.raises(documents.DocumentFormatError):
        documents.to_document({'a', 'b'})
