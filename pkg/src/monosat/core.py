"""Exact arithmetic on monomials and monomial ideals.

A monomial is a tuple of non-negative exponents of fixed length ``n``; the
all-zero tuple is the unit monomial.  A :class:`MonomialIdeal` stores its
unique minimal generating set in ascending lexicographic order, so equal
ideals compare (and serialize) identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

Monomial = tuple[int, ...]

INT64_MAX = 2**63 - 1

# below this many candidates the pure-python path beats numpy setup cost
_SMALL = 48
# bound on the boolean tensor built per numpy divisibility test
_CHUNK_CELLS = 4_000_000


class DimensionError(ValueError):
    """Monomials or ideals of different ambient dimension were mixed."""


def monomial(exponents: Iterable[int], n: int | None = None) -> Monomial:
    """Validate ``exponents`` and return them as a :data:`Monomial`."""
    u = tuple(int(e) for e in exponents)
    if n is not None and len(u) != n:
        raise DimensionError(f"monomial {u} has length {len(u)}, expected {n}")
    for e in u:
        if e < 0:
            raise ValueError(f"negative exponent in {u}")
        if e > INT64_MAX:
            raise OverflowError(f"exponent {e} exceeds the 64-bit range")
    return u


def one(n: int) -> Monomial:
    return (0,) * n


def variable(i: int, n: int, power: int = 1) -> Monomial:
    """``x_i^power`` with ``i`` 1-indexed."""
    if not 1 <= i <= n:
        raise ValueError(f"variable index {i} outside 1..{n}")
    u = [0] * n
    u[i - 1] = power
    return monomial(u)


def degree(u: Monomial) -> int:
    return sum(u)


def support(u: Monomial) -> frozenset[int]:
    """1-indexed variables dividing ``u``."""
    return frozenset(i + 1 for i, e in enumerate(u) if e > 0)


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def gcd(u: Monomial, v: Monomial) -> Monomial:
    return tuple(min(a, b) for a, b in zip(u, v))


def mul(u: Monomial, v: Monomial) -> Monomial:
    w = tuple(a + b for a, b in zip(u, v))
    if any(e > INT64_MAX for e in w):
        raise OverflowError(f"exponent overflow multiplying {u} by {v}")
    return w


def quotient(u: Monomial, f: Monomial) -> Monomial:
    """``u / gcd(u, f)``."""
    return tuple(a - b if a > b else 0 for a, b in zip(u, f))


def _divisible_mask(cands: np.ndarray, gens: np.ndarray) -> np.ndarray:
    """Row ``r`` is True iff ``cands[r]`` is divisible by some row of ``gens``."""
    out = np.zeros(len(cands), dtype=bool)
    if len(gens) == 0 or len(cands) == 0:
        return out
    step = max(1, _CHUNK_CELLS // len(gens))
    cols = gens.T
    for lo in range(0, len(cands), step):
        block = cands[lo:lo + step].T
        hit = block[0][:, None] >= cols[0][None, :]
        for j in range(1, len(cols)):
            hit &= block[j][:, None] >= cols[j][None, :]
        out[lo:lo + step] = hit.any(axis=1)
    return out


def _minimal_set(cands: set[Monomial], n: int) -> tuple[Monomial, ...]:
    if not cands:
        return ()
    unit = one(n)
    if unit in cands:
        return (unit,)
    ordered = sorted(cands, key=lambda u: (sum(u), u))
    if len(ordered) <= _SMALL:
        kept: list[Monomial] = []
        for u in ordered:
            if not any(divides(g, u) for g in kept):
                kept.append(u)
        return tuple(sorted(kept))
    arr = np.array(ordered, dtype=np.int64)
    degs = arr.sum(axis=1)
    bounds = np.flatnonzero(np.diff(degs)) + 1
    kept_arr = np.empty((0, n), dtype=np.int64)
    # distinct monomials of equal degree never divide each other
    for batch in np.split(arr, bounds):
        fresh = batch[~_divisible_mask(batch, kept_arr)]
        if len(fresh):
            kept_arr = np.vstack([kept_arr, fresh])
    return tuple(sorted(tuple(int(e) for e in row) for row in kept_arr))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in ``n`` variables, held by its minimal generators.

    Build instances with :func:`minimalize` (or the classmethods); the raw
    constructor trusts that ``gens`` is already minimal and sorted.
    """

    n: int
    gens: tuple[Monomial, ...]

    @classmethod
    def zero(cls, n: int) -> MonomialIdeal:
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> MonomialIdeal:
        return cls(n, (one(n),))

    @classmethod
    def maximal(cls, n: int) -> MonomialIdeal:
        """The homogeneous maximal ideal (x_1, ..., x_n)."""
        return minimalize([variable(i, n) for i in range(1, n + 1)], n)

    @classmethod
    def pure_powers(cls, exponents: Sequence[int]) -> MonomialIdeal:
        """``(x_i^{a_i} : a_i > 0)``."""
        n = len(exponents)
        return minimalize([variable(i + 1, n, a) for i, a in enumerate(exponents) if a > 0], n)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == (one(self.n),)

    def is_proper(self) -> bool:
        return not self.is_unit()

    def contains(self, u: Monomial) -> bool:
        return contains(self, u)

    def __contains__(self, u: Monomial) -> bool:
        return contains(self, u)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def array(self) -> np.ndarray:
        return np.array(self.gens, dtype=np.int64).reshape(len(self.gens), self.n)

    def __str__(self) -> str:
        return format_ideal(self)


def minimalize(gens: Iterable[Sequence[int]], n: int) -> MonomialIdeal:
    """Canonical ideal generated by ``gens``: divisibility-minimal, lex sorted."""
    return MonomialIdeal(n, _minimal_set({monomial(g, n) for g in gens}, n))


def _check_same(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.n != J.n:
        raise DimensionError(f"ambient dimensions differ: {I.n} vs {J.n}")


def contains(I: MonomialIdeal, u: Monomial) -> bool:
    """Monomial membership: some minimal generator divides ``u``."""
    if len(u) != I.n:
        raise DimensionError(f"monomial {u} does not live in {I.n} variables")
    return any(divides(g, u) for g in I.gens)


def contains_ideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff ``J`` is a subset of ``I``."""
    _check_same(I, J)
    if J.is_zero():
        return True
    if I.is_zero():
        return False
    return bool(_divisible_mask(J.array(), I.array()).all())


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I, J)
    n = I.n
    if I.is_zero() or J.is_zero():
        return MonomialIdeal.zero(n)
    A, B = I.array(), J.array()
    a_in_j = _divisible_mask(A, B)
    b_in_i = _divisible_mask(B, A)
    # generators already lying in the other ideal are themselves in I ∩ J
    cands = {tuple(int(e) for e in row) for row in A[a_in_j]}
    cands.update(tuple(int(e) for e in row) for row in B[b_in_i])
    ra, rb = A[~a_in_j], B[~b_in_i]
    if len(ra) and len(rb):
        lcms = np.maximum(ra[:, None, :], rb[None, :, :]).reshape(-1, n)
        cands.update(tuple(int(e) for e in row) for row in np.unique(lcms, axis=0))
    return MonomialIdeal(n, _minimal_set(cands, n))


def intersect_all(ideals: Iterable[MonomialIdeal], n: int) -> MonomialIdeal:
    """Intersection of ``ideals``; the empty intersection is S."""
    return reduce(intersect, ideals, MonomialIdeal.unit(n))


def colon_monomial(I: MonomialIdeal, f: Monomial) -> MonomialIdeal:
    """``I : (f)``, generated by ``u / gcd(u, f)`` over the generators of I."""
    f = monomial(f, I.n)
    return minimalize((quotient(u, f) for u in I.gens), I.n)


def colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """``I : J = {f : fJ ⊆ I}``."""
    _check_same(I, J)
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    return intersect_all((colon_monomial(I, f) for f in J.gens), I.n)


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I, J)
    n = I.n
    if I.is_zero() or J.is_zero():
        return MonomialIdeal.zero(n)
    A, B = I.array(), J.array()
    if int(A.max(initial=0)) + int(B.max(initial=0)) > INT64_MAX:
        raise OverflowError("exponent overflow in ideal product")
    prods = (A[:, None, :] + B[None, :, :]).reshape(-1, n)
    return MonomialIdeal(n, _minimal_set({tuple(int(e) for e in row) for row in prods}, n))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError("negative ideal power")
    result = MonomialIdeal.unit(I.n)
    for _ in range(k):
        result = multiply(result, I)
    return result


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I, J)
    return minimalize(I.gens + J.gens, I.n)


def format_monomial(u: Monomial) -> str:
    """Render in the ideal text grammar, e.g. ``x1^2*x3``; the unit is ``1``."""
    terms = [f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(u) if e]
    return "*".join(terms) if terms else "1"


def format_ideal(I: MonomialIdeal) -> str:
    body = ", ".join(format_monomial(u) for u in I.gens)
    return f"n={I.n}; {body}" if body else f"n={I.n};"
