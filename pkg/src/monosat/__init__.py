"""Saturation numbers, decompositions and symbolic powers of monomial ideals."""

from .core import (
    Monomial,
    MonomialIdeal,
    colon,
    contains,
    intersect,
    minimalize,
    multiply,
    power,
)
from .decomp import (
    Decomposition,
    IrreducibleComponent,
    irreducible_decomposition,
    is_m_primary,
    minimal_primes,
    primary_decomposition,
    two_variable_form,
)
from .powers import bracket_symbolic_power, compare_powers, symbolic_power_min
from .sat import (
    SaturationReport,
    colon_stable_fast,
    membership_in_irreducible_power,
    sat_irreducible_power,
    sat_stable,
    sat_two_vars,
    sat_upper_bound,
    saturation_chain,
)
from .stability import StabilityClass, m_index, stability_class, stable_closure

__all__ = [
    "Monomial",
    "MonomialIdeal",
    "colon",
    "contains",
    "intersect",
    "minimalize",
    "multiply",
    "power",
    "Decomposition",
    "IrreducibleComponent",
    "irreducible_decomposition",
    "is_m_primary",
    "minimal_primes",
    "primary_decomposition",
    "two_variable_form",
    "bracket_symbolic_power",
    "compare_powers",
    "symbolic_power_min",
    "SaturationReport",
    "colon_stable_fast",
    "membership_in_irreducible_power",
    "sat_irreducible_power",
    "sat_stable",
    "sat_two_vars",
    "sat_upper_bound",
    "saturation_chain",
    "StabilityClass",
    "m_index",
    "stability_class",
    "stable_closure",
]
