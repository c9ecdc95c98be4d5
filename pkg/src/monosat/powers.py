"""Ordinary and symbolic powers, and how their saturation numbers compare."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import MonomialIdeal, contains_ideal, intersect_all, power
from .decomp import irreducible_decomposition, is_m_primary, minimal_primes, primary_decomposition
from .sat import component_power_bound, sat


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError("symbolic powers are defined for k >= 1")


def symbolic_power_min(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """``I^(k)``: intersect the k-th powers of the primary components at minimal primes."""
    _check_k(k)
    minimal = set(minimal_primes(I))
    return intersect_all(
        (power(Q, k) for supp, Q in primary_decomposition(I) if supp in minimal), I.n
    )


def bracket_symbolic_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """``I^{k}``: intersect the k-th powers of all irredundant irreducible components."""
    _check_k(k)
    return intersect_all((power(q.ideal(), k) for q in irreducible_decomposition(I)), I.n)


@dataclass(frozen=True)
class PowerComparison:
    k: int
    m_primary: bool
    contains: bool
    sat_ordinary: int
    sat_bracket: int
    sat_bound_bracket: int
    violations: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations


def compare_powers(I: MonomialIdeal, k: int) -> PowerComparison:
    """Compare ``I^k`` with ``I^{k}``.

    Always checks ``I^k ⊆ I^{k}`` and ``sat(I^{k}) <= max sat(q_i^k)``; for
    m-primary ``I`` also equality in the latter and ``sat(I^{k}) <= sat(I^k)``.
    Failed checks are listed in ``violations`` rather than raised.
    """
    _check_k(k)
    ordinary = power(I, k)
    bracket = bracket_symbolic_power(I, k)
    primary = is_m_primary(I)
    report = dict(
        k=k,
        m_primary=primary,
        contains=contains_ideal(bracket, ordinary),
        sat_ordinary=sat(ordinary),
        sat_bracket=sat(bracket),
        sat_bound_bracket=component_power_bound(I, k),
    )
    violations = []
    if not report["contains"]:
        violations.append("ordinary power not contained in bracket power")
    if report["sat_bracket"] > report["sat_bound_bracket"]:
        violations.append("sat(bracket) exceeds component bound")
    if primary:
        if report["sat_bracket"] != report["sat_bound_bracket"]:
            violations.append("sat(bracket) differs from component bound on m-primary ideal")
        if report["sat_bracket"] > report["sat_ordinary"]:
            violations.append("sat(bracket) exceeds sat(ordinary) on m-primary ideal")
    return PowerComparison(violations=tuple(violations), **report)
