from .construction import (
    ConstructionParts, TcConstruction, control_coherent, control_rlg_one_var, kuroda_to_tc,
    one_var_star_grammar, rl1p_semantics, star_of_finite_union_free,
)
from .kuroda import (
    KurodaGrammar, MonotoneGrammar, NotKurodaError, NotMonotoneError, chain_context_rules,
    enumerate_monotone, monotone_to_kuroda, separate_terminals, split_bodies,
)
