"""Exit criteria for the package; every comparison is exact."""

import contextlib
import json
import random
import warnings

import pytest

from conftest import ACCEPTANCE, REM_213A_I, REM_213A_I2, REM_213B_A, REM_213B_B, REM_24_COMPONENTS, ideal
from monosat import verify
from monosat.cli import main
from monosat.core import MonomialIdeal, colon, contains_ideal, intersect_all, minimalize, power
from monosat.decomp import IrreducibleComponent, is_m_primary, two_variable_components
from monosat.powers import bracket_symbolic_power, compare_powers, symbolic_power_min
from monosat.sat import (
    component_power_bound,
    sat_irreducible_power,
    sat_two_vars,
    sat_upper_bound,
    saturation_chain,
)
from monosat.stability import stable_closure
from monosat.verify import VerifyConfig, run_verify


@contextlib.contextmanager
def criterion(number, title):
    try:
        yield
    except BaseException:
        ACCEPTANCE[number] = ("FAIL", title)
        print(f"FAIL criterion {number}: {title}")
        raise
    ACCEPTANCE[number] = ("PASS", title)
    print(f"PASS criterion {number}: {title}")


def sat(I):
    return saturation_chain(I).sat


def assert_clean(report):
    s = report["summary"]
    assert s["failed_checks"] == 0, [i["reproduce"] for i in report["instances"] if any(not c["ok"] for c in i["checks"])]
    assert report["ok"]


def test_criterion_01_strict_bound_example():
    with criterion(1, "three-component example: sat 3, bound 5, not m-primary"):
        I = intersect_all([MonomialIdeal.pure_powers(e) for e in REM_24_COMPONENTS], 3)
        assert sat(I) == 3
        assert sat_upper_bound(I) == 5
        assert is_m_primary(I) is False


def test_criterion_02_irreducible_powers():
    with criterion(2, "irreducible powers: closed form = oracle on 200 random instances"):
        q = IrreducibleComponent((3, 2, 2))
        assert sat_irreducible_power(q, 1) == 5
        m = MonomialIdeal.maximal(3)
        assert colon(q.ideal(), power(m, 4)) == m
        report = run_verify(VerifyConfig(family="irreducible", seed=2021, instances=200, n_max=4, exp_max=5, k_max=3))
        assert report["summary"]["instances"] == 200
        assert_clean(report)


def test_criterion_03_strongly_stable_example():
    with criterion(3, "strongly stable closure, its square, and sat(I) = sat(I^2) = 1"):
        I = stable_closure([(2, 0, 0, 0), (0, 2, 2, 0), (1, 1, 1, 1)], 4, strong=True)
        assert I == ideal(REM_213A_I) and len(I) == 9
        I2 = power(I, 2)
        assert I2 == ideal(REM_213A_I2) and len(I2) == 23
        assert sat(I) == 1 and sat(I2) == 1


def test_criterion_04_two_variable_example():
    with criterion(4, "two-variable example: sat(I^2) = 119, component bound 113"):
        I = minimalize(zip(REM_213B_A, REM_213B_B), 2)
        I2 = power(I, 2)
        assert sat_two_vars(I2) == 119 == sat(I2)
        assert max(sat_irreducible_power(q, 2) for q in two_variable_components(I)) == 113
        c = compare_powers(I, 2)
        assert (c.sat_bracket, c.sat_ordinary) == (113, 119)
        assert c.sat_bracket < c.sat_ordinary and c.ok


def test_criterion_05_maximal_ideal_ladder():
    with criterion(5, "sat(m^k) = k for k in 1..6, n in 2..4"):
        for n in (2, 3, 4):
            m = MonomialIdeal.maximal(n)
            q = IrreducibleComponent((1,) * n)
            for k in range(1, 7):
                assert sat_irreducible_power(q, k) == k
                assert sat(power(m, k)) == k


def test_criterion_06_squarefree():
    with criterion(6, "squarefree ideals inside m are saturated; symbolic power law"):
        rng = random.Random(6)
        below_m = 0
        for _ in range(160):
            n = rng.randint(1, 4)
            I = verify.random_squarefree(rng, n, 5)
            k = rng.randint(1, 3)
            is_m = I == MonomialIdeal.maximal(n)
            if not is_m:
                below_m += 1
                assert sat(I) == 0
            assert sat(symbolic_power_min(I, k)) == (k if is_m else 0)
        assert below_m >= 100


def test_criterion_07_stable_ideals():
    with criterion(7, "stable formulas; m-primary stable powers: sat = kd, three-way equality"):
        assert_clean(run_verify(VerifyConfig(family="stable", seed=7, instances=100, n_max=4, exp_max=3)))
        rng = random.Random(7)
        for _ in range(50):
            n = rng.randint(1, 3)
            I, d = verify.random_stable_m_primary(rng, n, 4, 4)
            m = MonomialIdeal.maximal(n)
            for k in (1, 2, 3):
                report = saturation_chain(power(I, k))
                assert report.sat == k * d
                assert report.chain[k * d - 1] == m
                assert component_power_bound(I, k) == report.sat == sat(bracket_symbolic_power(I, k))


def test_criterion_08_two_variables():
    with criterion(8, "two-variable closed form = oracle; closed-form decomposition re-intersects"):
        report = run_verify(VerifyConfig(family="two_var", seed=8, instances=200, n_max=2, exp_max=12, gens_max=6))
        assert report["summary"]["instances"] == 200
        assert_clean(report)


def test_criterion_09_symbolic_and_bracket_laws():
    with criterion(9, "containment, primary and bracket bounds, m-primary equality and inequality"):
        general = run_verify(VerifyConfig(family="general", seed=9, instances=100, n_max=3, exp_max=4, k_max=3))
        assert_clean(general)
        primary = run_verify(VerifyConfig(family="m_primary", seed=9, instances=100, n_max=3, exp_max=4, k_max=3))
        assert_clean(primary)


def test_criterion_10_equigenerated_explorer():
    with criterion(10, "equigenerated m-primary: no violation of sat(I^{k}) <= sat(I^k)"):
        report = run_verify(
            VerifyConfig(family="equigenerated_m_primary", seed=10, instances=100, n_max=3, exp_max=4, k_max=3)
        )
        assert_clean(report)
        obs = report["summary"]["observations"]
        print(f"equality sat(I^k) = sat(I^{{k}}) on {obs['sat_equality']}/{obs['count']} instances")


@pytest.fixture
def cli_files(tmp_path):
    texts = {
        "a": "n=3; x1^3, x2^2, x1^2*x3^2, x1*x2*x3^2",
        "b": json.dumps({"n": 2, "gens": [list(p) for p in zip(REM_213B_A, REM_213B_B)]}),
        "c": "n=4; x1^2, x2^2*x3^2, x1*x2*x3*x4",
    }
    out = {}
    for key, text in texts.items():
        p = tmp_path / key
        p.write_text(text)
        out[key] = str(p)
    return out


def test_criterion_11_determinism(capsys, cli_files):
    with criterion(11, "every subcommand is byte-identical across runs"):
        f = cli_files
        commands = [
            ["sat", f["a"], "--chain"],
            ["decompose", f["a"]],
            ["power", f["b"], "-k", "2"],
            ["symbolic", f["a"], "-k", "2", "--kind", "min"],
            ["symbolic", f["b"], "-k", "2", "--kind", "bracket"],
            ["stability", f["c"]],
            ["closure", f["c"], "--strong"],
            ["compare", f["b"], "-k", "2"],
            ["verify", "--family", "general", "--seed", "11", "--instances", "10"],
            ["verify", "--family", "equigenerated_m_primary", "--seed", "11", "--instances", "10"],
        ]
        for argv in commands:
            for fmt in ([], ["--json"]):
                outputs = []
                for _ in range(2):
                    with warnings.catch_warnings():
                        warnings.simplefilter("ignore")
                        assert main(argv + fmt) == 0
                    outputs.append(capsys.readouterr().out)
                assert outputs[0] == outputs[1] and outputs[0]
