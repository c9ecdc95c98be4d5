"""Irreducible and primary decompositions of monomial ideals."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import (
    DimensionError,
    Monomial,
    MonomialIdeal,
    contains_ideal,
    intersect_all,
    minimalize,
    support,
    variable,
)


@dataclass(frozen=True, order=True)
class IrreducibleComponent:
    """``(x_i^{a_i} : i in support)`` with every stored ``a_i > 0``.

    ``exponents`` has length ``n``; a zero entry means the variable is absent.
    """

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(a < 0 for a in self.exponents):
            raise ValueError(f"negative exponent in component {self.exponents}")
        if not any(self.exponents):
            raise ValueError("irreducible component needs a non-empty support")

    @classmethod
    def from_powers(cls, powers: Mapping[int, int], n: int) -> IrreducibleComponent:
        """Build from a 1-indexed ``{variable: exponent}`` mapping."""
        exps = [0] * n
        for i, a in powers.items():
            if not 1 <= i <= n:
                raise ValueError(f"variable index {i} outside 1..{n}")
            if a <= 0:
                raise ValueError("component exponents must be positive")
            exps[i - 1] = a
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def powers(self) -> dict[int, int]:
        return {i + 1: a for i, a in enumerate(self.exponents) if a}

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.powers)

    def is_m_primary(self) -> bool:
        return all(self.exponents)

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal.pure_powers(self.exponents)

    def contains_component(self, other: IrreducibleComponent) -> bool:
        """True iff ``other`` ⊆ ``self`` as ideals."""
        return all(b == 0 or 0 < a <= b for a, b in zip(self.exponents, other.exponents))

    def __str__(self) -> str:
        body = ", ".join(f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in self.powers.items())
        return f"({body})"


@dataclass(frozen=True)
class Decomposition:
    components: tuple[IrreducibleComponent, ...]
    irredundant: bool = True

    def __iter__(self):
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def ideal(self, n: int) -> MonomialIdeal:
        return intersect_all((q.ideal() for q in self.components), n)


def _require_proper_nonzero(I: MonomialIdeal) -> None:
    if I.is_zero():
        raise ValueError("decomposition of the zero ideal is undefined")
    if I.is_unit():
        raise ValueError("decomposition of the unit ideal is undefined")


def _split_leaves(gens: tuple[Monomial, ...], n: int, memo: dict) -> frozenset[tuple[int, ...]]:
    if gens in memo:
        return memo[gens]
    pivot = next((u for u in gens if len(support(u)) >= 2), None)
    if pivot is None:
        exps = [0] * n
        for u in gens:
            i = next(j for j, e in enumerate(u) if e)
            exps[i] = u[i]
        leaves = frozenset([tuple(exps)])
    else:
        i = min(support(pivot))
        c = pivot[i - 1]
        rest = [u for u in gens if u != pivot]
        head = variable(i, n, c)
        tail = tuple(0 if j == i - 1 else e for j, e in enumerate(pivot))
        left = minimalize(rest + [head], n).gens
        right = minimalize(rest + [tail], n).gens
        leaves = _split_leaves(left, n, memo) | _split_leaves(right, n, memo)
    memo[gens] = leaves
    return leaves


def _drop_redundant(comps: list[IrreducibleComponent]) -> list[IrreducibleComponent]:
    # for irreducible monomial components, the others' intersection lies in q
    # exactly when a single other component does
    kept = sorted(set(comps))
    i = 0
    while i < len(kept):
        q = kept[i]
        if any(j != i and q.contains_component(p) for j, p in enumerate(kept)):
            del kept[i]
        else:
            i += 1
    return kept


def irreducible_decomposition(I: MonomialIdeal) -> Decomposition:
    """Irredundant irreducible decomposition by generator splitting.

    A generator ``u`` with at least two variables is split as
    ``x_i^c * (u / x_i^c)``; the ideal is the intersection of the two ideals
    obtained by replacing ``u`` with either factor.
    """
    _require_proper_nonzero(I)
    leaves = _split_leaves(I.gens, I.n, {})
    return Decomposition(tuple(_drop_redundant([IrreducibleComponent(e) for e in leaves])))


def primary_decomposition(I: MonomialIdeal) -> list[tuple[frozenset[int], MonomialIdeal]]:
    """Group irreducible components by support and intersect each group.

    Returns ``(support, primary ideal)`` pairs sorted by support.
    """
    groups: dict[frozenset[int], list[IrreducibleComponent]] = {}
    for q in irreducible_decomposition(I):
        groups.setdefault(q.support, []).append(q)
    return [
        (supp, intersect_all((q.ideal() for q in groups[supp]), I.n))
        for supp in sorted(groups, key=lambda s: (len(s), sorted(s)))
    ]


def minimal_primes(I: MonomialIdeal) -> list[frozenset[int]]:
    """Inclusion-minimal supports of the irreducible components."""
    supports = {q.support for q in irreducible_decomposition(I)}
    minimal = [s for s in supports if not any(t < s for t in supports)]
    return sorted(minimal, key=lambda s: (len(s), sorted(s)))


def is_m_primary(I: MonomialIdeal) -> bool:
    """True iff some minimal generator is a pure power of each variable."""
    _require_proper_nonzero(I)
    pure = set()
    for u in I.gens:
        supp = support(u)
        if len(supp) == 1:
            pure |= supp
    return len(pure) == I.n


def two_variable_form(I: MonomialIdeal) -> list[tuple[int, int]]:
    """Generators ``x1^a x2^b`` as ``(a, b)`` with ``a`` strictly decreasing."""
    if I.n != 2:
        raise DimensionError("two_variable_form needs n = 2")
    _require_proper_nonzero(I)
    return sorted(((u[0], u[1]) for u in I.gens), key=lambda ab: -ab[0])


def two_variable_components(I: MonomialIdeal) -> list[IrreducibleComponent]:
    """Closed-form decomposition of a two-variable ideal.

    ``(x2^{b_1}) ∩ (x1^{a_1}, x2^{b_2}) ∩ ... ∩ (x1^{a_{m-1}}, x2^{b_m}) ∩ (x1^{a_m})``
    with the first or last factor dropped when ``b_1 = 0`` or ``a_m = 0``.
    """
    table = two_variable_form(I)
    a = [ab[0] for ab in table]
    b = [ab[1] for ab in table]
    comps = []
    if b[0] > 0:
        comps.append(IrreducibleComponent((0, b[0])))
    comps.extend(IrreducibleComponent((a[i], b[i + 1])) for i in range(len(table) - 1))
    if a[-1] > 0:
        comps.append(IrreducibleComponent((a[-1], 0)))
    return comps


def is_irredundant(components: list[IrreducibleComponent], n: int) -> bool:
    """Check that dropping any single component enlarges the intersection."""
    for i, q in enumerate(components):
        others = intersect_all((p.ideal() for j, p in enumerate(components) if j != i), n)
        if contains_ideal(q.ideal(), others):
            return False
    return True
