import collections
import concurrent.futures
import logging

from ..core.automata import equivalent
from ..core.measures import to_dfa
from ..subregular.search import DEFAULT_SEARCH_CAP, search_rlg
from ..subregular.slt import is_slt_k, is_slt_upto
from ..utils import format_word, render_template


LOGGER = logging.getLogger(__name__)


ClaimResultBase = collections.namedtuple(
    typename='ClaimResultBase', field_names=['claim', 'passed', 'evidence', 'certificate'],
)


class ClaimResult(ClaimResultBase):
    """The outcome of one claim: whether it was confirmed and the evidence."""
    __slots__ = ()

    @property
    def status(self):
        if not self.passed:
            return 'failed'
        return 'bounded' if self.claim.bounded else 'exact'


WitnessReportBase = collections.namedtuple(
    typename='WitnessReportBase',
    field_names=['case_id', 'n', 'title', 'state_complexity', 'sources', 'results'],
)


class WitnessReport(WitnessReportBase):
    """The verification report of one witness case.

    ``sources`` maps each source name to whether it compiles to the case's
    language. A report is green when every source agrees and every claim
    was confirmed, exactly or at its stated bound.
    """
    __slots__ = ()

    @property
    def name(self):
        return self.case_id if self.n is None else '{0}(n={1})'.format(self.case_id, self.n)

    @property
    def sources_agree(self):
        return all(self.sources.values())

    @property
    def green(self):
        return self.sources_agree and all(result.passed for result in self.results)

    def render(self):
        return render_text(self)


def _check_claim(dfa, claim, search_cap):
    family = claim.family
    if family == 'REG_Z':
        holds = dfa.n_states <= claim.parameter
        return holds, 'state complexity {0}'.format(dfa.n_states), dfa
    if family == 'SLT_k':
        verdict = is_slt_k(dfa, claim.parameter)
        if verdict:
            return True, 'canonical description regenerates L', verdict.description
        return False, 'counterexample {0}'.format(format_word(verdict.counterexample)), verdict.counterexample
    if family == 'SLT':
        verdict = is_slt_upto(dfa, claim.bound)
        if verdict:
            return True, 'SLT_{0}'.format(verdict.k), verdict.description
        return False, 'none up to k={0}, last counterexample {1}'.format(
            claim.bound, format_word(verdict.counterexample)), verdict.counterexample
    if family in ('RL_V', 'RL_P'):
        result = search_rlg(dfa, claim.bound, cap=search_cap)
        if result:
            grammar = result.grammar
            evidence = '{0} nonterminals, {1} productions: {2}'.format(
                grammar.n_vars, grammar.n_prods, '; '.join(str(rule) for rule in grammar.rules))
            return True, evidence, grammar
        return False, 'no grammar within budget {0}'.format(claim.bound), None
    raise ValueError('Unknown claim family {0!r}.'.format(family))


def verify_witness(case, search_cap=DEFAULT_SEARCH_CAP):
    """Check the sources and every claim of a witness case.

    Negative SLT claims with a bound and negative grammar claims are
    confirmed only up to their bound; all other claims are exact.

    Parameters
    ----------
    case : WitnessCase
        The case.
    search_cap : int, optional
        The cap passed to the grammar search.

    Returns
    -------
    WitnessReport
    """
    sources = collections.OrderedDict(
        (name, equivalent(to_dfa(source), case.dfa)) for name, source in case.sources.items()
    )
    results = []
    for claim in case.claims:
        holds, evidence, certificate = _check_claim(case.dfa, claim, search_cap)
        results.append(ClaimResult(claim, holds == claim.member, evidence, certificate))
    report = WitnessReport(case.id, case.n, case.title, case.dfa.n_states, sources, tuple(results))
    LOGGER.info('Verified %s: %s.', report.name, 'green' if report.green else 'red')
    return report


def verify_all(cases, workers=1, search_cap=DEFAULT_SEARCH_CAP):
    """Verify several witness cases, in parallel when workers > 1.

    The reports come back in the order of cases whatever the completion order.
    """
    cases = list(cases)
    if workers <= 1:
        return [verify_witness(case, search_cap) for case in cases]
    reports = [None] * len(cases)
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
        jobs = {executor.submit(verify_witness, case, search_cap): i for i, case in enumerate(cases)}
        # Calling result reraises any exception raised in a job.
        for job in concurrent.futures.as_completed(jobs):
            reports[jobs[job]] = job.result()
    return reports


def render_text(reports):
    """Render one report or a list of reports as text."""
    if isinstance(reports, WitnessReport):
        reports = [reports]
    return render_template('witness.txt', reports=reports)


def report_to_document(reports):
    """Convert witness reports into a structured report document body."""
    if isinstance(reports, WitnessReport):
        reports = [reports]
    return {
        'green': all(report.green for report in reports),
        'witnesses': [
            {
                'id': report.case_id,
                'n': report.n,
                'language': report.title,
                'state_complexity': report.state_complexity,
                'sources': [{'name': name, 'agrees': agrees} for name, agrees in report.sources.items()],
                'claims': [
                    {
                        'claim': str(result.claim),
                        'status': result.status,
                        'evidence': result.evidence,
                    }
                    for result in report.results
                ],
                'green': report.green,
            }
            for report in reports
        ],
    }
