from .families import ClassificationReport, FamilyVerdict, check_certificates, classify
from .search import Budget, SearchResult, SearchSpaceExceeded, factors, search_rlg
from .slt import (
    SltDescription, SltVerdict, SltWidthError, canonical_slt, is_slt_k, is_slt_upto,
    slt1_to_rlg, slt_member, slt_to_dfa,
)
