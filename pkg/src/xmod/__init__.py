"""Crossed modules realized as the pi_0 map of a normal inclusion of simplicial groups.

Typical use::

    from xmod import catalog, realize, verify_roundtrip
    nm = catalog.get("mod2").build()
    res = realize(nm, K=3)
    assert res.report.ok and verify_roundtrip(nm, 3, res).ok
"""

from xmod import catalog
from xmod.bar import bar_gn, bar_nn, natural_map
from xmod.crossed import (
    NormalMap,
    QuotientNormalMap,
    check_nm1,
    check_nm2,
    identity_crossed_module,
    inclusion_crossed_module,
    quotient_hypothesis_failures,
    quotient_normal_map,
    search_crossed_structures,
    trivial_target_crossed_module,
    validate,
)
from xmod.errors import XmodError
from xmod.groups import (
    FiniteGroup,
    GroupAction,
    Homomorphism,
    Subgroup,
    cyclic_group,
    direct_product,
    group_action,
    group_from_permutations,
    group_from_table,
    homomorphism,
    quotient,
    semidirect_product,
    subgroup_generated,
    trivial_group,
)
from xmod.kernels import BACKEND
from xmod.problem import Report, parse_problem
from xmod.realization import realize, verify_roundtrip
from xmod.report import AxiomReport, Violation
from xmod.simplicial import (
    TruncatedSimplicialGroup,
    check_simplicial_group,
    identity_component,
    induced_pi0_map,
    moore_pi0_iso,
    moore_pi_n,
    pi0,
)

__version__ = "0.1.0"

__all__ = [
    "catalog",
    "Report",
    "parse_problem",
    "bar_gn",
    "bar_nn",
    "natural_map",
    "NormalMap",
    "QuotientNormalMap",
    "check_nm1",
    "check_nm2",
    "identity_crossed_module",
    "inclusion_crossed_module",
    "quotient_hypothesis_failures",
    "quotient_normal_map",
    "search_crossed_structures",
    "trivial_target_crossed_module",
    "validate",
    "XmodError",
    "FiniteGroup",
    "GroupAction",
    "Homomorphism",
    "Subgroup",
    "cyclic_group",
    "direct_product",
    "group_action",
    "group_from_permutations",
    "group_from_table",
    "homomorphism",
    "quotient",
    "semidirect_product",
    "subgroup_generated",
    "trivial_group",
    "BACKEND",
    "realize",
    "verify_roundtrip",
    "AxiomReport",
    "Violation",
    "TruncatedSimplicialGroup",
    "check_simplicial_group",
    "identity_component",
    "induced_pi0_map",
    "moore_pi0_iso",
    "moore_pi_n",
    "pi0",
]
