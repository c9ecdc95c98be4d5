"""Stable and strongly stable monomial ideals and their closures."""

from __future__ import annotations

from collections import deque
from enum import IntEnum
from typing import Iterable, Iterator, Sequence

from .core import Monomial, MonomialIdeal, contains, minimalize, monomial


class StabilityClass(IntEnum):
    NOT_STABLE = 0
    STABLE = 1
    STRONGLY_STABLE = 2

    def __str__(self) -> str:
        return self.name.lower()


def m_index(u: Monomial) -> int:
    """Largest 1-indexed ``j`` with ``x_j | u``; 0 for the unit monomial."""
    for j in range(len(u), 0, -1):
        if u[j - 1]:
            return j
    return 0


def _exchange(u: Monomial, i: int, j: int) -> Monomial:
    """``x_i * u / x_j`` (1-indexed, assumes ``x_j | u``)."""
    w = list(u)
    w[j - 1] -= 1
    w[i - 1] += 1
    return tuple(w)


def stable_moves(u: Monomial) -> Iterator[Monomial]:
    m = m_index(u)
    for i in range(1, m):
        yield _exchange(u, i, m)


def strongly_stable_moves(u: Monomial) -> Iterator[Monomial]:
    for j in range(2, len(u) + 1):
        if u[j - 1]:
            for i in range(1, j):
                yield _exchange(u, i, j)


def is_stable(I: MonomialIdeal) -> bool:
    return all(contains(I, v) for u in I.gens for v in stable_moves(u))


def is_strongly_stable(I: MonomialIdeal) -> bool:
    return all(contains(I, v) for u in I.gens for v in strongly_stable_moves(u))


def stability_class(I: MonomialIdeal) -> StabilityClass:
    """Classify ``I`` by testing the exchange conditions on ``G(I)``."""
    if I.is_zero():
        raise ValueError("stability of the zero ideal is not defined")
    if is_strongly_stable(I):
        return StabilityClass.STRONGLY_STABLE
    if is_stable(I):
        return StabilityClass.STABLE
    return StabilityClass.NOT_STABLE


def stable_closure(monomials: Iterable[Sequence[int]], n: int, strong: bool = False) -> MonomialIdeal:
    """Smallest (strongly) stable ideal containing ``monomials``.

    Breadth-first closure under the exchange moves; moves keep the total
    degree, so the orbit of each input is finite.
    """
    start = [monomial(u, n) for u in monomials]
    if not start:
        raise ValueError("stable closure of an empty set")
    moves = strongly_stable_moves if strong else stable_moves
    seen = set(start)
    queue = deque(start)
    while queue:
        u = queue.popleft()
        for v in moves(u):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return minimalize(seen, n)
