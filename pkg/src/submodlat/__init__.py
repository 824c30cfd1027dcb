"""Finite-group computation over explicit permutation representations:
subgroup lattices, modular/submodular subgroups, supersolubility-related
group classes, and a statement-verification harness."""

from .catalog import builtin_catalog, catalog_names, catalog_spec
from .classes import (
    ClassReport,
    analyze,
    is_abelian,
    is_in_A,
    is_in_B,
    is_metanilpotent,
    is_nilpotent,
    is_ore_dispersive,
    is_p_nilpotent,
    is_smU,
    is_soluble,
    is_strongly_supersoluble,
    is_supersoluble,
    is_wU,
)
from .context import Context, Limits
from .errors import (
    ConsistencyError,
    ResourceLimitError,
    RouteDisagreementError,
    SpecParseError,
    SubmodlatError,
)
from .groups import Group, GroupSpec, closure, direct_product, quotient
from .lattice import SubgroupLattice, chief_series, dot_export, enumerate_subgroups
from .modularity import (
    compact_submodular_chain,
    is_kp_subnormal,
    is_modular,
    is_p_subnormal,
    is_submodular,
    lemma12_predict,
    maximal_modular_subgroups,
    modular_relation,
    submodular_chain,
)
from .specfile import parse_spec_file, parse_spec_text
from .verify import SuiteResult, find_minimal_non, run_suite, run_suites

__version__ = "0.1.0"

__all__ = [
    "ClassReport",
    "ConsistencyError",
    "Context",
    "Group",
    "GroupSpec",
    "Limits",
    "ResourceLimitError",
    "RouteDisagreementError",
    "SpecParseError",
    "SubgroupLattice",
    "SubmodlatError",
    "SuiteResult",
    "analyze",
    "builtin_catalog",
    "catalog_names",
    "catalog_spec",
    "chief_series",
    "closure",
    "compact_submodular_chain",
    "direct_product",
    "dot_export",
    "enumerate_subgroups",
    "find_minimal_non",
    "is_abelian",
    "is_in_A",
    "is_in_B",
    "is_kp_subnormal",
    "is_metanilpotent",
    "is_modular",
    "is_nilpotent",
    "is_ore_dispersive",
    "is_p_nilpotent",
    "is_p_subnormal",
    "is_smU",
    "is_soluble",
    "is_strongly_supersoluble",
    "is_submodular",
    "is_supersoluble",
    "is_wU",
    "lemma12_predict",
    "maximal_modular_subgroups",
    "modular_relation",
    "parse_spec_file",
    "parse_spec_text",
    "quotient",
    "run_suite",
    "run_suites",
    "submodular_chain",
]
