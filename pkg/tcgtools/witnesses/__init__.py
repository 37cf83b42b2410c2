from .catalog import (
    CATALOG, Claim, UnknownWitnessError, UnsupportedParameterError, WitnessCase, build_witness,
    default_cases, witness_ids,
)
from .hierarchy import Edge, EdgeResult, HierarchyReport, hierarchy_report
from .verify import ClaimResult, WitnessReport, render_text, report_to_document, verify_all, verify_witness
