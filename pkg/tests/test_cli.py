"""Tests for the command line, run in-process through main."""
import json

import pytest

from tcgtools import cli, config, documents
from tcgtools.cli import main
from tcgtools.core.automata import Dfa
from tcgtools.subregular.slt import SltDescription
from tcgtools.treectrl.grammar import TcGrammar


@pytest.fixture(autouse=True)
def no_user_settings(tmp_path, monkeypatch):
    monkeypatch.setattr(config, 'default_settings_path', lambda: str(tmp_path / 'settings.json'))


@pytest.fixture
def workspace(tmp_path, l1, g2, abc_grammar):
    paths = {}
    for name, obj in [('l1', l1), ('g2', g2), ('abc', abc_grammar), ('all', Dfa.universal(('a', 'b'))),
                      ('l2', SltDescription(1, ('a', 'b', 'c'), B=['a', 'b'], I=['b', 'c'], E=['a', 'c']))]:
        paths[name] = str(tmp_path / '{0}.json'.format(name))
        documents.dump(obj, paths[name])
    return paths


def test_regex_writes_a_dfa_document(tmp_path):
    out = str(tmp_path / 'l1.json')
    assert main(['regex', '--expr', 'a*b(a|b)*', '--alphabet', 'a,b', '--out', out]) == 0
    dfa = documents.load(out)
    assert isinstance(dfa, Dfa)
    assert dfa.n_states == 2


def test_regex_text(capsys):
    assert main(['regex', '--expr', 'a1a2*', '--alphabet', 'a1 a2', '--format', 'text']) == 0
    out = capsys.readouterr().out
    assert 'State(L) = 3' in out
    assert 'union-free: yes' in out


def test_regex_syntax_error(capsys):
    assert main(['regex', '--expr', '(a|b', '--alphabet', 'a,b']) == 2
    assert 'tcgtools: error:' in capsys.readouterr().err


def test_equivalence(workspace, capsys):
    assert main(['automaton', 'equiv', '--in', workspace['l1'], '--other', workspace['l1'], '--format', 'text']) == 0
    assert capsys.readouterr().out.strip() == 'equivalent'
    assert main(['automaton', 'equiv', '--in', workspace['l1'], '--other', workspace['all'],
                 '--format', 'text']) == 1
    assert capsys.readouterr().out.strip() == 'not equivalent, they differ on λ'


def test_equivalence_report_document(workspace, capsys):
    assert main(['automaton', 'equiv', '--in', workspace['l1'], '--other', workspace['all']]) == 1
    document = json.loads(capsys.readouterr().out)
    assert document['kind'] == 'report'
    assert document['body'] == {'equivalent': False, 'witness': []}


def test_automaton_needs_other(workspace, capsys):
    assert main(['automaton', 'combine', '--in', workspace['l1']]) == 2
    assert '--other' in capsys.readouterr().err


def test_enumerate_and_state_complexity(workspace, capsys):
    assert main(['automaton', 'enumerate', '--in', workspace['l1'], '--max-len', '2', '--format', 'text']) == 0
    assert capsys.readouterr().out.splitlines() == ['b', 'a b', 'b a', 'b b']
    assert main(['automaton', 'state-complexity', '--in', workspace['l2'], '--format', 'text']) == 0
    assert capsys.readouterr().out.strip() == '5'


def test_slt_member(workspace, capsys):
    assert main(['slt', 'member', '--in', workspace['l2'], '--word', 'b c b a', '--format', 'text']) == 0
    assert capsys.readouterr().out.strip() == 'member'
    assert main(['slt', 'member', '--in', workspace['l2'], '--word', 'c', '--format', 'text']) == 1
    assert capsys.readouterr().out.strip() == 'not a member'


def test_slt_needs_a_description(workspace, capsys):
    assert main(['slt', 'member', '--in', workspace['l1'], '--word', 'a']) == 2
    assert 'expected SltDescription' in capsys.readouterr().err


def test_classify(workspace, capsys):
    assert main(['classify', '--in', workspace['l1']]) == 0
    assert 'State(L) = 2' in capsys.readouterr().out


def test_search_rlg(workspace, capsys):
    assert main(['search-rlg', '--in', workspace['l1'], '--budget', '2,5,1']) == 0
    assert capsys.readouterr().out.startswith('2 nonterminals')
    assert main(['search-rlg', '--in', workspace['l1'], '--budget', '1,2,1']) == 1
    assert main(['search-rlg', '--in', workspace['l1'], '--budget', '1,9']) == 2


def test_tc_enumerate(workspace, capsys):
    assert main(['tc', 'enumerate', '--in', workspace['g2'], '--max-len', '9']) == 0
    assert capsys.readouterr().out.splitlines() == ['a a b b c c', 'a a a b b b c c c']


def test_tc_trace_and_certify(workspace, tmp_path, capsys):
    trace = str(tmp_path / 'trace.json')
    assert main(['tc', 'enumerate', '--in', workspace['g2'], '--max-len', '9', '--trace-of', 'a a b b c c',
                 '--format', 'doc', '--out', trace]) == 0
    assert main(['tc', 'certify', '--in', workspace['g2'], '--trace', trace, '--word', 'a a b b c c']) == 0
    assert capsys.readouterr().out.strip() == 'valid'
    assert main(['tc', 'certify', '--in', workspace['g2'], '--trace', trace, '--word', 'a b c']) == 1


def test_kuroda_pipeline(workspace, tmp_path, capsys):
    kuroda = str(tmp_path / 'kuroda.json')
    tc = str(tmp_path / 'tc.json')
    assert main(['transform', 'kuroda', '--in', workspace['abc'], '--out', kuroda]) == 0
    assert main(['transform', 'cs-to-tc', '--in', kuroda, '--out', tc]) == 0
    assert isinstance(documents.load(tc), TcGrammar)
    assert isinstance(documents.load(str(tmp_path / 'tc.control.json')), SltDescription)
    assert main(['tc', 'validate', '--in', tc]) == 0
    assert main(['tc', 'enumerate', '--in', tc, '--max-len', '3']) == 0
    assert capsys.readouterr().out.splitlines() == ['valid', 'a b c']


def test_cs_to_tc_needs_kuroda_form(workspace):
    assert main(['transform', 'cs-to-tc', '--in', workspace['abc']]) == 2


def test_union_free_star(capsys):
    assert main(['transform', 'uf-star', '--word', 'a b', '--word', 'b', '--format', 'text']) == 0
    assert capsys.readouterr().out.strip() == '((a b)* b*)*'


def test_witness_verify(capsys):
    assert main(['witness', 'verify', '--id', 'l-l6']) == 0
    out = capsys.readouterr().out
    assert '# l-l6: {a}' in out
    assert '=> green' in out


def test_witness_errors(capsys):
    assert main(['witness', 'verify', '--id', 'l-l42']) == 2
    assert 'l-l42' in capsys.readouterr().err
    assert main(['witness', 'verify', '--id', 'l-l1', '--n', '2']) == 2


def test_config_errors(tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text('{"k_max": 0}', encoding='utf-8')
    assert main(['--config', str(path), 'witness', 'verify', '--id', 'l-l6']) == 2


def test_file_errors(workspace, tmp_path, capsys):
    assert main(['automaton', 'minimize', '--in', str(tmp_path / 'missing.json')]) == 2
    assert 'Cannot open' in capsys.readouterr().err
    out = str(tmp_path / 'no' / 'such' / 'dir.json')
    assert main(['automaton', 'minimize', '--in', workspace['l1'], '--out', out]) == 2
    assert 'Cannot open' in capsys.readouterr().err


def test_alphabet_errors(capsys):
    assert main(['regex', '--expr', 'a', '--alphabet', 'a,a']) == 2
    assert '--alphabet' in capsys.readouterr().err
    assert main(['regex', '--expr', '%eps']) == 2
    assert main(['transform', 'uf-star', '--word', '']) == 2
    assert 'needs --alphabet' in capsys.readouterr().err


def test_internal_errors_are_not_usage_errors(workspace, monkeypatch):

    def broken(*args, **kwargs):
        raise ValueError('broken decider')

    monkeypatch.setattr(cli, 'classify', broken)
    with pytest.raises(ValueError):
        main(['classify', '--in', workspace['l1']])


@pytest.mark.parametrize('argv', [
    ['automaton', 'minimize'],
    ['witness', 'verify'],
    ['tc', 'certify', '--in', 'g2.json'],
    ['transform', 'uf-star'],
    ['automaton', 'reverse', '--in', 'l1.json'],
])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    assert excinfo.value.code == 2
