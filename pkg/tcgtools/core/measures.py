from .automata import DEFAULT_MAX_STATES, Dfa, Nfa, determinize_minimize
from .regex import Regex, RegularExpression


def to_dfa(language, max_states=DEFAULT_MAX_STATES):
    """Return the minimal canonical DFA of any regular language carrier.

    Parameters
    ----------
    language : Dfa, Nfa, Regex, RegularExpression or an object with ``to_dfa``
        The language. A bare :class:`Regex` tree is read over its own symbols.
    """
    if isinstance(language, Dfa):
        return language.minimize()
    if isinstance(language, Nfa):
        return determinize_minimize(language, max_states)
    if isinstance(language, Regex):
        return RegularExpression(language).to_dfa(max_states)
    to_dfa_method = getattr(language, 'to_dfa', None)
    if to_dfa_method is None:
        raise TypeError('Cannot build a DFA from {0!r}.'.format(language))
    return to_dfa_method(max_states=max_states).minimize()


def state_complexity(language, max_states=DEFAULT_MAX_STATES):
    """State(L): the number of states of the minimal complete DFA, sink included."""
    return to_dfa(language, max_states).n_states
