from .derivation import (
    Certificate, Choice, DerivationTrace, EnumerationResult, LevelConfig, TreeControlError,
    tc_certify, tc_enumerate, tc_step,
)
from .grammar import Cfg, GrammarShapeError, TcGrammar, validate_tc
