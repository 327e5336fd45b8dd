"""Exact sparing numbers of weak IASI graphs and their powers."""

__version__ = "0.1.0"

from .families import Family, FamilySpec, generate
from .formulas import evaluate_formula
from .graph import INF, Graph, all_pairs_distance, diameter, graph_power
from .mwis import WeightedInstance, mwis_bitmask, mwis_branch_bound, mwis_cycle_power, mwis_path_power
from .sparing import SparingResult, construct_certificate, sparing_number, sparing_number_of
from .sumset import SetLabel, WeakIasiCertificate, exhaustive_min_mono, sumset, validate_certificate

__all__ = [
    "INF",
    "Family",
    "FamilySpec",
    "Graph",
    "SetLabel",
    "SparingResult",
    "WeakIasiCertificate",
    "WeightedInstance",
    "all_pairs_distance",
    "construct_certificate",
    "diameter",
    "evaluate_formula",
    "exhaustive_min_mono",
    "generate",
    "graph_power",
    "mwis_bitmask",
    "mwis_branch_bound",
    "mwis_cycle_power",
    "mwis_path_power",
    "sparing_number",
    "sparing_number_of",
    "sumset",
    "validate_certificate",
]
