from .automata import (
    AlphabetMismatchError, Dfa, Nfa, StateBudgetExceeded, UnknownSymbolError,
    combine, complement, determinize_minimize, enumerate_dfa, equivalent, included,
    is_suffix_closed, minimize_by_reversal, shortest_word, suffix_language,
)
from .grammars import GrammarError, RightLinearGrammar, Rule, dfa_to_rlg, rlg_to_nfa
from .measures import state_complexity, to_dfa
from .regex import (
    Concat, Empty, Literal, Regex, RegexSyntaxError, RegularExpression, Star, Union,
    compile_regex, parse_regex,
)
