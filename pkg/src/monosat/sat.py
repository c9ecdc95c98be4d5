"""Saturation numbers of monomial ideals.

:func:`saturation_chain` is the reference computation: it walks
``I, I:m, I:m^2, ...`` with the generic colon until the chain stops growing.
Every other function here evaluates a closed form and is checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DimensionError, Monomial, MonomialIdeal, colon, minimalize, quotient, variable
from .decomp import IrreducibleComponent, irreducible_decomposition, two_variable_form
from .stability import is_stable


@dataclass(frozen=True)
class SaturationReport:
    chain: tuple[MonomialIdeal, ...]
    sat: int

    @property
    def saturation(self) -> MonomialIdeal:
        return self.chain[-1]


def saturation_chain(I: MonomialIdeal) -> SaturationReport:
    """Colon by the maximal ideal until stable.

    The chain ends with its first repeated term, so ``sat = len(chain) - 2``.
    The zero and unit ideals give a constant chain and ``sat = 0``.
    """
    m = MonomialIdeal.maximal(I.n)
    chain = [I]
    while True:
        nxt = colon(chain[-1], m)
        chain.append(nxt)
        if nxt == chain[-2]:
            break
    return SaturationReport(tuple(chain), len(chain) - 2)


def sat(I: MonomialIdeal) -> int:
    return saturation_chain(I).sat


def saturation(I: MonomialIdeal) -> MonomialIdeal:
    return saturation_chain(I).saturation


def t_k(q: IrreducibleComponent, k: int) -> int:
    """``k * a_max + (sum of the other exponents) - n + 1`` for a full-support ``q``."""
    a = q.exponents
    top = max(range(len(a)), key=lambda i: (a[i], -i))
    return k * a[top] + sum(a) - a[top] - len(a) + 1


def sat_irreducible_power(q: IrreducibleComponent, k: int) -> int:
    """Saturation number of ``q^k``; zero unless ``q`` involves every variable."""
    if k < 1:
        raise ValueError("k must be positive")
    if not q.is_m_primary():
        return 0
    return t_k(q, k)


def membership_in_irreducible_power(q: IrreducibleComponent, k: int, u: Monomial) -> bool:
    """``u ∈ q^k`` iff the sum of ``floor(b_i / a_i)`` over the support reaches ``k``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if len(u) != q.n:
        raise DimensionError(f"monomial {u} does not live in {q.n} variables")
    return sum(b // a for a, b in zip(q.exponents, u) if a) >= k


def _require_stable(I: MonomialIdeal) -> None:
    if I.is_zero():
        raise ValueError("the zero ideal is excluded")
    if not is_stable(I):
        raise ValueError("ideal is not stable")


def sat_stable(I: MonomialIdeal) -> int:
    """Largest power of ``x_n`` dividing a minimal generator of a stable ideal."""
    _require_stable(I)
    return max(u[-1] for u in I.gens)


def colon_stable_fast(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """``I : m^k`` for stable ``I``, computed as ``I : x_n^k``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    _require_stable(I)
    f = variable(I.n, I.n, k)
    return minimalize((quotient(u, f) for u in I.gens), I.n)


def sat_two_vars(I: MonomialIdeal) -> int:
    """``s - a_m - b_1 - 1`` with ``s = max(a_i + b_{i+1})`` over the sorted generators.

    A principal ideal has no such pairs and is saturated, so it gives 0.
    """
    table = two_variable_form(I)
    if len(table) == 1:
        return 0
    s = max(table[i][0] + table[i + 1][1] for i in range(len(table) - 1))
    return s - table[-1][0] - table[0][1] - 1


def sat_upper_bound(I: MonomialIdeal) -> int:
    """Max of ``sat(q)`` over the irredundant irreducible components."""
    return max(sat_irreducible_power(q, 1) for q in irreducible_decomposition(I))


def component_power_bound(I: MonomialIdeal, k: int) -> int:
    """Max of ``sat(q^k)`` over the irredundant irreducible components."""
    return max(sat_irreducible_power(q, k) for q in irreducible_decomposition(I))
