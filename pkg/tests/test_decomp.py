import pytest
from hypothesis import given, settings

from conftest import REM_213B_A, REM_213B_B, ideal, ideals
from monosat.core import DimensionError, MonomialIdeal, contains_ideal, intersect_all, minimalize
from monosat.decomp import (
    IrreducibleComponent,
    irreducible_decomposition,
    is_irredundant,
    is_m_primary,
    minimal_primes,
    primary_decomposition,
    two_variable_components,
    two_variable_form,
)


def comps(I):
    return [q.exponents for q in irreducible_decomposition(I)]


def test_maximal_ideal_is_irreducible():
    assert comps(MonomialIdeal.maximal(3)) == [(1, 1, 1)]


def test_principal_squarefree_splits():
    assert comps(ideal("n=2; x1*x2")) == [(0, 1), (1, 0)]


def test_two_variable_example(rem213b):
    expected = [(50, 10), (40, 34), (39, 35), (38, 36), (37, 37), (36, 38), (35, 39), (34, 40), (10, 50)]
    assert sorted(comps(rem213b)) == sorted(expected)
    assert sorted(q.exponents for q in two_variable_components(rem213b)) == sorted(expected)


def test_component_type():
    q = IrreducibleComponent.from_powers({1: 3, 3: 2}, 3)
    assert q.exponents == (3, 0, 2)
    assert q.support == frozenset({1, 3})
    assert q.ideal() == minimalize([(3, 0, 0), (0, 0, 2)], 3)
    assert not q.is_m_primary()
    assert str(q) == "(x1^3, x3^2)"
    with pytest.raises(ValueError):
        IrreducibleComponent((0, 0))
    with pytest.raises(ValueError):
        IrreducibleComponent.from_powers({1: 0}, 2)


def test_decomposition_rejects_trivial_ideals():
    for bad in (MonomialIdeal.zero(2), MonomialIdeal.unit(2)):
        with pytest.raises(ValueError):
            irreducible_decomposition(bad)


def test_primary_decomposition_examples(rem24):
    assert primary_decomposition(ideal("n=2; x1*x2")) == [
        (frozenset({1}), minimalize([(1, 0)], 2)),
        (frozenset({2}), minimalize([(0, 1)], 2)),
    ]
    q = MonomialIdeal.pure_powers((2, 3))
    assert [s for s, _ in primary_decomposition(q)] == [frozenset({1, 2})]
    groups = primary_decomposition(rem24)
    assert [s for s, _ in groups] == [frozenset({1, 2}), frozenset({1, 2, 3})]
    assert groups[0][1] == ideal("n=3; x1^2, x1*x2, x2^2")
    assert intersect_all((Q for _, Q in groups), 3) == rem24


def test_minimal_primes_examples(rem24):
    assert minimal_primes(ideal("n=2; x1*x2")) == [frozenset({1}), frozenset({2})]
    assert minimal_primes(MonomialIdeal.pure_powers((2, 2, 5))) == [frozenset({1, 2, 3})]
    assert minimal_primes(rem24) == [frozenset({1, 2})]


def test_is_m_primary_examples(rem24):
    assert is_m_primary(MonomialIdeal.maximal(4))
    assert not is_m_primary(ideal("n=2; x1*x2"))
    assert not is_m_primary(rem24)


def test_two_variable_form_examples(rem213b):
    assert two_variable_form(ideal("n=2; x1^2, x2^3")) == [(2, 0), (0, 3)]
    assert two_variable_form(rem213b) == list(zip(REM_213B_A, REM_213B_B))
    assert two_variable_form(ideal("n=2; x1^2*x2^3")) == [(2, 3)]
    with pytest.raises(DimensionError):
        two_variable_form(MonomialIdeal.maximal(3))


@settings(max_examples=80, deadline=None)
@given(ideals(proper=True, exp_max=4, gens_max=5))
def test_decomposition_reintersects_and_is_irredundant(I):
    dec = irreducible_decomposition(I)
    assert dec.ideal(I.n) == I
    assert is_irredundant(list(dec), I.n)
    assert irreducible_decomposition(I) == dec
    supports = {q.support for q in dec}
    assert set(minimal_primes(I)) == {s for s in supports if not any(t < s for t in supports)}
    groups = primary_decomposition(I)
    assert intersect_all((Q for _, Q in groups), I.n) == I


@settings(max_examples=80, deadline=None)
@given(ideals(n_max=2, exp_max=8, gens_max=6, proper=True).filter(lambda I: I.n == 2))
def test_two_variable_components_match_splitting(I):
    table = two_variable_form(I)
    assert all(table[i][0] > table[i + 1][0] and table[i][1] < table[i + 1][1] for i in range(len(table) - 1))
    assert sorted(two_variable_components(I)) == list(irreducible_decomposition(I))


@settings(max_examples=60, deadline=None)
@given(ideals(proper=True, exp_max=4))
def test_is_m_primary_agrees_with_radical(I):
    radical_is_m = {frozenset(range(1, I.n + 1))} == set(minimal_primes(I))
    assert is_m_primary(I) == radical_is_m
    m = MonomialIdeal.maximal(I.n)
    assert is_m_primary(I) == any(contains_ideal(I, MonomialIdeal.pure_powers((d,) * I.n)) for d in range(1, 20))
    assert contains_ideal(m, I)
