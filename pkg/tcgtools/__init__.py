# -*- coding: utf-8 -*-
"""
tcgtools
========

This Python package provides a workbench for tree-controlled grammars whose
control languages come from subregular families. It decides the subregular
families and complexity measures of regular languages, converts monotone
grammars into Kuroda normal form and tree-controlled grammars, and verifies
the witness languages separating the families.

:license: MIT, see docs/license.rst for more details.
"""

__version__ = '0.1.0'

# Regular languages
from .core.automata import Dfa, Nfa, equivalent, included, minimize_by_reversal
from .core.grammars import RightLinearGrammar, Rule
from .core.measures import state_complexity, to_dfa
from .core.regex import RegularExpression, compile_regex, parse_regex

# Subregular families
from .subregular.families import classify
from .subregular.search import Budget, search_rlg
from .subregular.slt import SltDescription, is_slt_k, slt_to_dfa

# Tree-controlled grammars
from .treectrl.derivation import tc_certify, tc_enumerate
from .treectrl.grammar import Cfg, TcGrammar, validate_tc

# Transformations
from .transforms.construction import kuroda_to_tc
from .transforms.kuroda import KurodaGrammar, MonotoneGrammar, monotone_to_kuroda

# Witnesses
from .witnesses.catalog import build_witness
from .witnesses.hierarchy import hierarchy_report
from .witnesses.verify import verify_witness

__all__ = [
    # Regular languages
    'Dfa', 'Nfa', 'equivalent', 'included', 'minimize_by_reversal', 'RightLinearGrammar', 'Rule',
    'state_complexity', 'to_dfa', 'RegularExpression', 'compile_regex', 'parse_regex',

    # Subregular families
    'classify', 'Budget', 'search_rlg', 'SltDescription', 'is_slt_k', 'slt_to_dfa',

    # Tree-controlled grammars
    'tc_certify', 'tc_enumerate', 'Cfg', 'TcGrammar', 'validate_tc',

    # Transformations
    'kuroda_to_tc', 'KurodaGrammar', 'MonotoneGrammar', 'monotone_to_kuroda',

    # Witnesses
    'build_witness', 'hierarchy_report', 'verify_witness',
]
