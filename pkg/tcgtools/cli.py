"""The tcgtools command line.

Every command reads workspace documents given with ``--in`` and writes its
result to ``--out`` or the standard output, either as text or, with
``--format doc``, as a document. The exit code is 0 on success, on a green
report and on a positive decision, 1 on a red report or a negative decision
and 2 on usage, document, symbol or resource errors.
"""
import argparse
import logging
import os
import sys

import contextlib2

from . import __version__, documents
from .config import ConfigurationError, load_settings, report_dir
from .core.automata import (
    COMBINE_MODES, AlphabetMismatchError, Dfa, Nfa, StateBudgetExceeded, UnknownSymbolError, check_alphabet,
    combine, complement, enumerate_dfa, equivalent, is_suffix_closed, suffix_language,
)
from .core.grammars import GrammarError, RightLinearGrammar, dfa_to_rlg
from .core.measures import to_dfa
from .core.regex import RegexSyntaxError, RegularExpression, parse_regex
from .subregular.families import check_certificates, classify
from .subregular.search import Budget, BudgetError, SearchSpaceExceeded, search_rlg
from .subregular.slt import SLT_METHODS, SltDescription, SltWidthError, is_slt_k, is_slt_upto, slt1_to_rlg, slt_to_dfa
from .transforms.construction import (
    control_rlg_one_var, kuroda_to_tc, one_var_star_grammar, star_of_finite_union_free,
)
from .transforms.kuroda import KurodaGrammar, MonotoneGrammar, NotKurodaError, NotMonotoneError, monotone_to_kuroda
from .treectrl.derivation import DerivationTrace, TreeControlError, tc_certify, tc_enumerate
from .treectrl.grammar import GrammarShapeError, TcGrammar, validate_tc
from .utils import format_word, parse_word
from .witnesses.catalog import UnknownWitnessError, UnsupportedParameterError, build_witness, default_cases
from .witnesses.hierarchy import hierarchy_report
from .witnesses.verify import render_text, report_to_document, verify_all


LOGGER = logging.getLogger(__name__)

#: Errors reported on stderr with exit code 2.
USAGE_ERRORS = (
    documents.DocumentFormatError, ConfigurationError, RegexSyntaxError, UnknownSymbolError,
    AlphabetMismatchError, SltWidthError, GrammarError, GrammarShapeError, NotMonotoneError,
    NotKurodaError, TreeControlError, UnknownWitnessError, UnsupportedParameterError,
    StateBudgetExceeded, SearchSpaceExceeded, BudgetError,
)

REGULAR_CARRIERS = (Dfa, Nfa, RegularExpression, RightLinearGrammar, SltDescription)


class CommandError(Exception):
    pass


def _alphabet(text):
    if text is None:
        return None
    alphabet = tuple(part for part in text.replace(',', ' ').split() if part)
    try:
        return check_alphabet(alphabet)
    except ValueError as e:
        raise CommandError('Invalid --alphabet {0!r}: {1}'.format(text, e))


def _open(path, mode='r'):
    try:
        return open(path, mode, encoding='utf-8')
    except OSError as e:
        raise CommandError('Cannot open {0}: {1}'.format(path, e.strerror or e))


def _load(path, *kinds):
    with _open(path) as f:
        obj = documents.loads(f.read())
    if kinds and not isinstance(obj, kinds):
        raise CommandError('{0} holds a {1} document, expected {2}.'.format(
            path, documents.kind_of(obj), ' or '.join(cls.__name__ for cls in kinds)))
    return obj


def _language(path, settings):
    return to_dfa(_load(path, *REGULAR_CARRIERS), settings.max_states)


def _describe(obj):
    if isinstance(obj, Dfa):
        return 'DFA over {{{0}}} with {1} states, start {2}, finals {3}'.format(
            ', '.join(obj.alphabet), obj.n_states, obj.start, sorted(obj.finals))
    if isinstance(obj, RightLinearGrammar):
        return '\n'.join(str(rule) for rule in obj.rules)
    if isinstance(obj, SltDescription):
        lines = ['k = {0}'.format(obj.k)]
        for name in 'BIEF':
            lines.append('{0} = {{{1}}}'.format(name, ', '.join(format_word(w) for w in obj.sorted_words(name))))
        return '\n'.join(lines)
    if isinstance(obj, MonotoneGrammar):
        return '\n'.join('{0} -> {1}'.format(' '.join(lhs), format_word(rhs)) for lhs, rhs in obj.rules)
    if isinstance(obj, TcGrammar):
        rules = ['{0} -> {1}'.format(lhs, format_word(body)) for lhs, body in obj.core.pairs()]
        return '\n'.join(rules + ['control: ' + _describe(obj.control)])
    return str(obj)


class _Output(object):
    """Writes command results in the requested format."""

    def __init__(self, stream, format):
        self.stream = stream
        self.format = format

    def write(self, obj=None, text=None, report=None):
        """Write a workspace object, or a report body given as report=(name, body)."""
        if self.format == 'doc':
            if report is not None:
                self.stream.write(documents.dumps(documents.report_document(*report)))
            else:
                self.stream.write(documents.dumps(obj))
        else:
            text = _describe(obj) if text is None else text
            self.stream.write(text if text.endswith('\n') else text + '\n')


def cmd_regex(args, settings, out):
    alphabet = _alphabet(args.alphabet)
    tree = parse_regex(args.expr, alphabet)
    if alphabet is None and not tree.symbols():
        raise CommandError('{0!r} has no symbols, give --alphabet.'.format(args.expr))
    expr = RegularExpression(tree, alphabet)
    dfa = expr.to_dfa(settings.max_states)
    text = '{0}\nState(L) = {1}\nunion-free: {2}'.format(
        expr, dfa.n_states, 'yes' if expr.tree.is_union_free() else 'no')
    out.write(dfa, text)
    return 0


def cmd_automaton(args, settings, out):
    action = args.action
    dfa = _language(args.input, settings)
    if action == 'state-complexity':
        out.write(text=str(dfa.n_states), report=('state-complexity', {'state_complexity': dfa.n_states}))
        return 0
    if action == 'minimize':
        out.write(dfa)
        return 0
    if action == 'complement':
        out.write(complement(dfa))
        return 0
    if action == 'suffix':
        suffixes = suffix_language(dfa)
        out.write(suffixes, '{0}\nsuffix-closed: {1}'.format(
            _describe(suffixes), 'yes' if is_suffix_closed(dfa) else 'no'))
        return 0
    if action == 'to-rlg':
        grammar = dfa_to_rlg(dfa)
        out.write(grammar.reduce() if args.reduce else grammar)
        return 0
    if action == 'enumerate':
        words = enumerate_dfa(dfa, args.max_len)
        out.write(text='\n'.join(format_word(word) for word in words),
                  report=('words', {'words': [list(word) for word in words]}))
        return 0
    if args.other is None:
        raise CommandError('automaton {0} needs --other.'.format(action))
    other = _language(args.other, settings)
    if action == 'combine':
        out.write(combine(dfa, other, args.mode))
        return 0
    same, witness = equivalent(dfa, other, return_witness=True)
    text = 'equivalent' if same else 'not equivalent, they differ on {0}'.format(format_word(witness))
    out.write(text=text, report=('equivalence', {
        'equivalent': same, 'witness': None if same else list(witness)}))
    return 0 if same else 1


def cmd_classify(args, settings, out):
    dfa = _language(args.input, settings)
    report = classify(dfa, k_max=settings.k_max, definite_k_max=settings.definite_k_max,
                      mon_n_max=settings.mon_n_max)
    failed = check_certificates(report, dfa)
    if failed:
        LOGGER.error('Certificates failed to regenerate the language: %s', ', '.join(failed))
    out.write(text=report.render(), report=('classification', report.to_document()))
    return 1 if failed else 0


def cmd_slt(args, settings, out):
    if args.action == 'decide':
        dfa = _language(args.input, settings)
        verdict = is_slt_k(dfa, args.k) if args.k else is_slt_upto(dfa, settings.k_max)
        if verdict:
            out.write(verdict.description, 'SLT_{0}\n{1}'.format(verdict.k, _describe(verdict.description)))
            return 0
        bound = args.k or settings.k_max
        out.write(text='not SLT_{0}{1}, counterexample {2}'.format(
            '' if args.k else 'k for k <= ', bound, format_word(verdict.counterexample)),
            report=('slt', {'holds': False, 'k': bound, 'counterexample': list(verdict.counterexample)}))
        return 1
    desc = _load(args.input, SltDescription)
    if args.action == 'member':
        member = desc.accepts(parse_word(args.word))
        out.write(text='member' if member else 'not a member', report=('membership', {'member': member}))
        return 0 if member else 1
    if args.action == 'to-dfa':
        out.write(slt_to_dfa(desc, args.method, settings.max_states))
        return 0
    out.write(slt1_to_rlg(desc))
    return 0


def cmd_search_rlg(args, settings, out):
    dfa = _language(args.input, settings)
    result = search_rlg(dfa, Budget.parse(args.budget), cap=settings.search_cap)
    if not result:
        out.write(text='no grammar within budget {0}'.format(result.budget),
                  report=('search', {'found': False, 'budget': list(result.budget)}))
        return 1
    out.write(result.grammar, '{0} nonterminals, {1} productions\n{2}'.format(
        result.grammar.n_vars, result.grammar.n_prods, _describe(result.grammar)))
    return 0


def cmd_tc(args, settings, out):
    grammar = _load(args.input, TcGrammar)
    if args.action == 'validate':
        violations = validate_tc(grammar)
        out.write(text='\n'.join(violations) or 'valid',
                  report=('validation', {'valid': not violations, 'violations': violations}))
        return 1 if violations else 0
    if args.action == 'certify':
        trace = _load(args.trace, DerivationTrace)
        word = parse_word(args.word) if args.word is not None else None
        certificate = tc_certify(grammar, trace, word)
        out.write(text='valid' if certificate else 'invalid: {0}'.format(certificate.diagnostic),
                  report=('certificate', {'valid': certificate.valid, 'diagnostic': certificate.diagnostic}))
        return 0 if certificate else 1
    result = tc_enumerate(grammar, args.max_len, max_depth=args.max_depth)
    if args.trace_of is not None:
        word = parse_word(args.trace_of)
        if word not in result.traces:
            raise CommandError('{0} is not generated up to length {1}.'.format(format_word(word), args.max_len))
        trace = result.traces[word]
        out.write(trace, '\n'.join(' '.join(str(c) for c in level) for level in trace.levels))
        return 0
    out.write(text='\n'.join(format_word(word) for word in result.words), report=('words', {
        'words': [list(word) for word in result.words],
        'configs_explored': result.configs_explored,
        'levels': result.levels,
    }))
    return 0


def cmd_transform(args, settings, out):
    if args.action == 'kuroda':
        out.write(monotone_to_kuroda(_load(args.input, MonotoneGrammar)))
        return 0
    if args.action == 'cs-to-tc':
        construction = kuroda_to_tc(_load(args.input, KurodaGrammar), settings.max_states)
        control_out = args.control_out
        if control_out is None and args.out is not None:
            control_out = os.path.splitext(args.out)[0] + '.control.json'
        if control_out is not None:
            with _open(control_out, 'w') as f:
                f.write(documents.dumps(construction.control_desc))
        out.write(construction.tc)
        return 0
    if args.action == 'one-var' and args.input is not None:
        grammar = control_rlg_one_var(kuroda_to_tc(_load(args.input, KurodaGrammar), settings.max_states))
        out.write(grammar)
        return 0
    words = [parse_word(word) for word in args.word]
    alphabet = _alphabet(args.alphabet) or tuple(sorted({symbol for word in words for symbol in word}))
    if not alphabet:
        raise CommandError('transform {0} needs --alphabet when every word is empty.'.format(args.action))
    if args.action == 'one-var':
        out.write(one_var_star_grammar(words, alphabet))
        return 0
    out.write(RegularExpression(star_of_finite_union_free(words), alphabet))
    return 0


def _save(name, text, document):
    try:
        path = report_dir(name)
    except OSError as e:
        raise CommandError('Cannot create the report directory: {0}'.format(e))
    with _open(os.path.join(path, 'report.txt'), 'w') as f:
        f.write(text)
    with _open(os.path.join(path, 'report.json'), 'w') as f:
        f.write(documents.dumps(document))
    LOGGER.info('Saved the %s reports in %s', name, path)


def cmd_witness(args, settings, out):
    if args.action == 'verify':
        cases = [build_witness(args.id, args.n, max_n=settings.max_witness_n)]
    else:
        cases = default_cases(args.max_n)
    reports = verify_all(cases, workers=settings.workers, search_cap=settings.search_cap)
    text = render_text(reports)
    body = report_to_document(reports)
    if args.save:
        _save('witness', text, documents.report_document('witness', body))
    out.write(text=text, report=('witness', body))
    return 0 if body['green'] else 1


def cmd_hierarchy(args, settings, out):
    report = hierarchy_report(
        max_n=args.max_n, tc_max_len=args.max_len, samples=args.samples, seed=args.seed,
        workers=settings.workers, search_cap=settings.search_cap,
    )
    text = report.render()
    if args.save:
        _save('hierarchy', text, documents.report_document('hierarchy', report.to_document()))
    out.write(text=text, report=('hierarchy', report.to_document()))
    return 0 if report.green else 1


def _add_io(parser, output=True):
    parser.add_argument('--in', dest='input', metavar='PATH', help='the input document')
    if output:
        parser.add_argument('--out', metavar='PATH', help='write the result here instead of the standard output')
        parser.add_argument('--format', choices=('text', 'doc'), help='the output format')


def build_parser():
    parser = argparse.ArgumentParser(prog='tcgtools', description=__doc__.splitlines()[0])
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v for info, -vv for debug logging')
    parser.add_argument('--config', metavar='PATH', help='a settings.json file')
    parser.add_argument('--max-states', type=int, help='the determinization state cap')
    parser.add_argument('--search-cap', type=int, help='the cap of grammar searches')
    parser.add_argument('--workers', type=int, help='processes used for witness verification')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    p = commands.add_parser('regex', help='compile a regular expression')
    p.add_argument('--expr', required=True, help='the expression')
    p.add_argument('--alphabet', help='the symbols, separated by commas or spaces')
    _add_io(p)
    p.set_defaults(handler=cmd_regex, default_format='doc', needs_input=False)

    p = commands.add_parser('automaton', help='operations on regular languages')
    p.add_argument('action', choices=(
        'minimize', 'equiv', 'enumerate', 'combine', 'complement', 'suffix', 'to-rlg', 'state-complexity'))
    p.add_argument('--other', metavar='PATH', help='the second operand of equiv and combine')
    p.add_argument('--mode', choices=COMBINE_MODES, default='union')
    p.add_argument('--max-len', type=int, default=6)
    p.add_argument('--reduce', action='store_true', help='reduce the grammar of to-rlg')
    _add_io(p)
    p.set_defaults(handler=cmd_automaton, default_format='doc')

    p = commands.add_parser('classify', help='decide the subregular families of a language')
    p.add_argument('--k-max', type=int)
    p.add_argument('--definite-k-max', type=int)
    p.add_argument('--mon-n-max', type=int)
    _add_io(p)
    p.set_defaults(handler=cmd_classify, default_format='text')

    p = commands.add_parser('slt', help='strictly locally testable descriptions')
    p.add_argument('action', choices=('member', 'to-dfa', 'to-rlg', 'decide'))
    p.add_argument('--word', default='', help='the word of member, symbols separated by spaces')
    p.add_argument('--method', choices=SLT_METHODS, default='window')
    p.add_argument('--k', type=int, help='the window width of decide; default: every k up to --k-max')
    p.add_argument('--k-max', type=int)
    _add_io(p)
    p.set_defaults(handler=cmd_slt, default_format='doc')

    p = commands.add_parser('search-rlg', help='search for a least right-linear grammar')
    p.add_argument('--budget', required=True, help='vars,prods,rhs')
    _add_io(p)
    p.set_defaults(handler=cmd_search_rlg, default_format='text')

    p = commands.add_parser('tc', help='tree-controlled grammars')
    p.add_argument('action', choices=('enumerate', 'certify', 'validate'))
    p.add_argument('--max-len', type=int, default=8)
    p.add_argument('--max-depth', type=int)
    p.add_argument('--trace', metavar='PATH', help='the trace document of certify')
    p.add_argument('--word', help='the word a trace must derive')
    p.add_argument('--trace-of', metavar='WORD', help='output the trace of this word instead of the words')
    _add_io(p)
    p.set_defaults(handler=cmd_tc, default_format='text')

    p = commands.add_parser('transform', help='grammar transformations')
    p.add_argument('action', choices=('kuroda', 'cs-to-tc', 'uf-star', 'one-var'))
    p.add_argument('--word', action='append', default=[], help='a word of uf-star or one-var, repeatable')
    p.add_argument('--alphabet')
    p.add_argument('--control-out', metavar='PATH', help='where cs-to-tc writes the width-2 control description')
    _add_io(p)
    p.set_defaults(handler=cmd_transform, default_format='doc', needs_input=False)

    p = commands.add_parser('witness', help='verify the witness languages')
    p.add_argument('action', choices=('verify', 'all'))
    p.add_argument('--id', help='the catalog id of verify')
    p.add_argument('--n', type=int, help='the parameter of verify')
    p.add_argument('--max-n', type=int, default=4, help='the largest parameter of all')
    p.add_argument('--save', action='store_true', help='also save the reports in the user data directory')
    _add_io(p)
    p.set_defaults(handler=cmd_witness, default_format='text', needs_input=False)

    p = commands.add_parser('hierarchy', help='check the edges of both hierarchies')
    p.add_argument('--max-n', type=int, default=3)
    p.add_argument('--max-len', type=int, default=6, help='the length bound of the construction check')
    p.add_argument('--samples', type=int, default=25)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--save', action='store_true')
    _add_io(p)
    p.set_defaults(handler=cmd_hierarchy, default_format='text', needs_input=False)
    return parser


def _configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%a %b %d %H:%M:%S %Z %Y',
        level=level,
    )


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    if getattr(args, 'needs_input', True) and args.input is None:
        parser.error('{0} needs --in.'.format(args.command))
    if args.command == 'witness' and args.action == 'verify' and args.id is None:
        parser.error('witness verify needs --id.')
    if args.command == 'tc' and args.action == 'certify' and args.trace is None:
        parser.error('tc certify needs --trace.')
    if args.command == 'transform' and args.action in ('kuroda', 'cs-to-tc') and args.input is None:
        parser.error('transform {0} needs --in.'.format(args.action))
    if args.command == 'transform' and args.action in ('uf-star', 'one-var') and not (args.word or args.input):
        parser.error('transform {0} needs --word.'.format(args.action))
    try:
        settings = load_settings(
            args.config,
            k_max=getattr(args, 'k_max', None),
            definite_k_max=getattr(args, 'definite_k_max', None),
            mon_n_max=getattr(args, 'mon_n_max', None),
            max_states=args.max_states,
            search_cap=args.search_cap,
            workers=args.workers,
        )
        with contextlib2.ExitStack() as stack:
            if args.out is not None:
                stream = stack.enter_context(_open(args.out, 'w'))
            else:
                stream = sys.stdout
            return args.handler(args, settings, _Output(stream, args.format or args.default_format))
    except (CommandError,) + USAGE_ERRORS as e:
        LOGGER.debug('Command failed.', exc_info=True)
        sys.stderr.write('tcgtools: error: {0}\n'.format(e))
        return 2


if __name__ == '__main__':

    status = main()
    sys.exit(status)
