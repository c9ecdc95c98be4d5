"""Randomized formula-versus-oracle verification.

Each family draws ideals that satisfy the hypotheses of a group of closed
forms, evaluates the formulas, and compares them with the colon-chain
oracle.  Checks on proven statements decide the exit status; observations
on open problems are only tallied.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

from .core import (
    MonomialIdeal,
    colon,
    contains,
    contains_ideal,
    format_ideal,
    intersect_all,
    minimalize,
    power,
    variable,
)
from .decomp import (
    IrreducibleComponent,
    irreducible_decomposition,
    is_irredundant,
    is_m_primary,
    minimal_primes,
    primary_decomposition,
    two_variable_components,
)
from .powers import bracket_symbolic_power, compare_powers, symbolic_power_min
from .sat import (
    colon_stable_fast,
    component_power_bound,
    membership_in_irreducible_power,
    sat_irreducible_power,
    sat_stable,
    sat_two_vars,
    sat_upper_bound,
    SaturationReport,
    saturation_chain,
    t_k,
)
from .stability import stable_closure

FAMILIES = (
    "irreducible",
    "stable",
    "stable_m_primary",
    "two_var",
    "m_primary",
    "equigenerated_m_primary",
    "squarefree",
    "general",
)


@dataclass(frozen=True)
class VerifyConfig:
    family: str
    seed: int = 0
    instances: int = 100
    n_max: int = 3
    exp_max: int = 4
    gens_max: int = 4
    k_max: int = 3

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        for name in ("instances", "n_max", "exp_max", "gens_max", "k_max"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if not -(2**63) <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")
        if self.family == "two_var" and self.n_max < 2:
            raise ValueError("two_var needs n_max >= 2")


@dataclass
class Instance:
    index: int
    ideal: str
    k: int | None
    checks: list[dict[str, Any]] = field(default_factory=list)
    observations: dict[str, Any] = field(default_factory=dict)

    def check(self, name: str, expected: Any, actual: Any, ok: bool | None = None) -> None:
        self.checks.append(
            {"name": name, "expected": expected, "actual": actual, "ok": expected == actual if ok is None else ok}
        )

    @property
    def failed(self) -> list[dict[str, Any]]:
        return [c for c in self.checks if not c["ok"]]


# -- random ideals --------------------------------------------------------

def _rand_n(rng: random.Random, cfg: VerifyConfig, low: int = 1) -> int:
    return rng.randint(min(low, cfg.n_max), cfg.n_max)


def random_irreducible(rng: random.Random, n: int, exp_max: int, full: bool = False) -> IrreducibleComponent:
    while True:
        exps = tuple(
            rng.randint(1, exp_max) if full or rng.random() > 1 / (n + 2) else 0 for _ in range(n)
        )
        if any(exps):
            return IrreducibleComponent(exps)


def random_monomial(rng: random.Random, n: int, exp_max: int) -> tuple[int, ...]:
    return tuple(rng.randint(0, exp_max) for _ in range(n))


def random_ideal(rng: random.Random, n: int, exp_max: int, gens_max: int) -> MonomialIdeal:
    """Proper non-zero ideal from up to ``gens_max`` random monomials."""
    while True:
        gens = [random_monomial(rng, n, exp_max) for _ in range(rng.randint(1, gens_max))]
        I = minimalize(gens, n)
        if I.is_proper():
            return I


def random_m_primary(rng: random.Random, n: int, exp_max: int, gens_max: int) -> MonomialIdeal:
    """Pure-power frame ``x_i^{a_i}`` plus random monomials below it."""
    frame = [rng.randint(1, exp_max) for _ in range(n)]
    gens = [variable(i + 1, n, a) for i, a in enumerate(frame)]
    for _ in range(rng.randint(0, gens_max)):
        gens.append(tuple(rng.randint(0, a - 1) for a in frame))
    return minimalize([g for g in gens if any(g)] or gens[:n], n)


def random_equigenerated_m_primary(rng: random.Random, n: int, d: int, gens_max: int) -> MonomialIdeal:
    """Degree-``d`` monomials together with ``x_i^d`` for every ``i``."""
    gens = [variable(i + 1, n, d) for i in range(n)]
    for _ in range(rng.randint(0, gens_max)):
        cuts = sorted(rng.randint(0, d) for _ in range(n - 1))
        parts = [b - a for a, b in zip([0] + cuts, cuts + [d])]
        gens.append(tuple(parts))
    return minimalize(gens, n)


def random_stable(rng: random.Random, n: int, exp_max: int, gens_max: int) -> MonomialIdeal:
    seeds = [random_monomial(rng, n, exp_max) for _ in range(rng.randint(1, gens_max))]
    seeds = [u for u in seeds if any(u)] or [variable(n, n)]
    return stable_closure(seeds, n, strong=rng.random() < 0.5)


def random_stable_m_primary(rng: random.Random, n: int, exp_max: int, gens_max: int) -> tuple[MonomialIdeal, int]:
    """Stable m-primary ideal with ``x_n^d`` as a minimal generator; returns ``(I, d)``."""
    d = rng.randint(1, exp_max)
    seeds = [variable(n, n, d)]
    for _ in range(rng.randint(0, gens_max)):
        u = random_monomial(rng, n, d)
        # pure x_n powers of degree < d would swallow x_n^d
        if any(u[:-1]):
            seeds.append(u)
    return stable_closure(seeds, n, strong=rng.random() < 0.5), d


def random_squarefree(rng: random.Random, n: int, gens_max: int) -> MonomialIdeal:
    while True:
        gens = [tuple(rng.randint(0, 1) for _ in range(n)) for _ in range(rng.randint(1, gens_max))]
        I = minimalize(gens, n)
        if I.is_proper():
            return I


# -- families -------------------------------------------------------------

def _m(n: int) -> MonomialIdeal:
    return MonomialIdeal.maximal(n)


def _colon_m_power(report: SaturationReport, j: int) -> MonomialIdeal:
    """``I : m^j`` read off a saturation chain of ``I``."""
    return report.chain[min(j, len(report.chain) - 1)]


def _irreducible(rng: random.Random, cfg: VerifyConfig, inst: Instance) -> MonomialIdeal:
    n = _rand_n(rng, cfg)
    q = random_irreducible(rng, n, cfg.exp_max)
    k = rng.randint(1, cfg.k_max)
    inst.k = k
    qk = power(q.ideal(), k)
    report = saturation_chain(qk)
    inst.check("sat(q^k) closed form", report.sat, sat_irreducible_power(q, k))
    if q.is_m_primary():
        t = t_k(q, k)
        m = _m(n)
        inst.check("q^k : m^(t_k-1) = m", format_ideal(m), format_ideal(_colon_m_power(report, t - 1)))
        if t >= 2:
            below = _colon_m_power(report, t - 2)
            inst.check("q^k : m^(t_k-2) strictly inside m", True,
                       contains_ideal(m, below) and below != m)
    for _ in range(4):
        u = random_monomial(rng, n, cfg.exp_max * k)
        inst.check(f"membership {u}", contains(qk, u), membership_in_irreducible_power(q, k, u))
    return q.ideal()


def _stable(rng: random.Random, cfg: VerifyConfig, inst: Instance) -> MonomialIdeal:
    n = _rand_n(rng, cfg)
    I = random_stable(rng, n, cfg.exp_max, cfg.gens_max)
    inst.check("sat stable closed form", saturation_chain(I).sat, sat_stable(I))
    m = _m(n)
    for k in range(6):
        inst.check(f"I : m^{k} via x_n^{k}", format_ideal(colon(I, power(m, k))),
                   format_ideal(colon_stable_fast(I, k)))
    return I


def _stable_m_primary(rng: random.Random, cfg: VerifyConfig, inst: Instance) -> MonomialIdeal:
    n = _rand_n(rng, cfg)
    I, d = random_stable_m_primary(rng, n, cfg.exp_max, cfg.gens_max)
    k = rng.randint(1, cfg.k_max)
    inst.k = k
    Ik = power(I, k)
    m = _m(n)
    report = saturation_chain(Ik)
    s = report.sat
    inst.check("sat(I^k) = k d", k * d, s)
    inst.check("I^k : m^(kd-1) = m", format_ideal(m), format_ideal(_colon_m_power(report, k * d - 1)))
    inst.check("component bound = sat(I^k)", s, component_power_bound(I, k))
    inst.check("sat(I^{k}) = sat(I^k)", s, saturation_chain(bracket_symbolic_power(I, k)).sat)
    return I


def _two_var(rng: random.Random, cfg: VerifyConfig, inst: Instance) -> MonomialIdeal:
    I = random_ideal(rng, 2, cfg.exp_max, cfg.gens_max)
    inst.check("two-variable closed form", saturation_chain(I).sat, sat_two_vars(I))
    comps = two_variable_components(I)
    inst.check("closed-form components re-intersect", format_ideal(I),
               format_ideal(intersect_all((q.ideal() for q in comps), 2)))
    inst.check("closed-form components = splitting decomposition",
               [q.exponents for q in irreducible_decomposition(I)],
               [q.exponents for q in sorted(comps)])
    return I


def _observe_problems(inst: Instance, I: MonomialIdeal, k: int) -> dict[str, Any]:
    """Tallies for the open equality questions on m-primary ideals."""
    Ik = power(I, k)
    bracket = bracket_symbolic_power(I, k)
    ordinary_chain = saturation_chain(Ik)
    bracket_chain = saturation_chain(bracket)
    so, sb = ordinary_chain.sat, bracket_chain.sat
    tk = component_power_bound(I, k)
    inst.check("sat(I^{k}) <= sat(I^k)", True, sb <= so)
    # smallest s with I^k : m^l = I^{k} : m^l for every l >= s
    a, b = list(ordinary_chain.chain), list(bracket_chain.chain)
    length = max(len(a), len(b))
    a += [a[-1]] * (length - len(a))
    b += [b[-1]] * (length - len(b))
    s_k = length
    while s_k > 0 and a[s_k - 1] == b[s_k - 1]:
        s_k -= 1
    m = _m(I.n)
    obs = {
        "sat_ordinary": so,
        "sat_bracket": sb,
        "equal": so == sb,
        "m_in_Ik_colon_m_tk": contains_ideal(_colon_m_power(ordinary_chain, tk), m),
        "s_k": s_k,
        "s_k_below_tk": s_k < tk,
    }
    inst.observations.update(obs)
    return obs


def _m_primary(rng: random.Random, cfg: VerifyConfig, inst: Instance) -> MonomialIdeal:
    n = _rand_n(rng, cfg)
    I = random_m_primary(rng, n, cfg.exp_max, cfg.gens_max)
    k = rng.randint(1, cfg.k_max)
    inst.k = k
    inst.check("sat(I) = max sat(q_i) on m-primary", saturation_chain(I).sat, sat_upper_bound(I))
    cmp = compare_powers(I, k)
    inst.check("power comparison statements", [], list(cmp.violations))
    _observe_problems(inst, I, k)
    return I


def _equigenerated(rng: random.Random, cfg: VerifyConfig, inst: Instance) -> MonomialIdeal:
    n = _rand_n(rng, cfg, low=2)
    d = rng.randint(1, cfg.exp_max)
    I = random_equigenerated_m_primary(rng, n, d, cfg.gens_max)
    k = rng.randint(1, cfg.k_max)
    inst.k = k
    _observe_problems(inst, I, k)
    return I


def _squarefree(rng: random.Random, cfg: VerifyConfig, inst: Instance) -> MonomialIdeal:
    n = _rand_n(rng, cfg)
    I = random_squarefree(rng, n, cfg.gens_max)
    k = rng.randint(1, cfg.k_max)
    inst.k = k
    is_m = I == _m(n)
    inst.check("squarefree ideal inside m is saturated", 1 if is_m else 0, saturation_chain(I).sat)
    expected = k if is_m else 0
    inst.check("sat(I^(k)) for squarefree I", expected, saturation_chain(symbolic_power_min(I, k)).sat)
    return I


def _general(rng: random.Random, cfg: VerifyConfig, inst: Instance) -> MonomialIdeal:
    n = _rand_n(rng, cfg)
    I = random_ideal(rng, n, cfg.exp_max, cfg.gens_max)
    k = rng.randint(1, cfg.k_max)
    inst.k = k
    dec = irreducible_decomposition(I)
    inst.check("components re-intersect", format_ideal(I), format_ideal(dec.ideal(n)))
    inst.check("components irredundant", True, is_irredundant(list(dec), n))
    report = saturation_chain(I)
    bound = sat_upper_bound(I)
    inst.check("sat(I) <= max sat(q_i)", True, report.sat <= bound)
    if bound > 0:
        inst.check("sat(I) = max sat(q_i) iff m-primary", is_m_primary(I), report.sat == bound)
    inst.check("chain steps within bound + 1", True, len(report.chain) - 1 <= bound + 1)
    groups = primary_decomposition(I)
    primary_bound = max(saturation_chain(Q).sat for _, Q in groups)
    inst.check("sat(I) <= max sat(primary)", True, report.sat <= primary_bound)
    minimal = set(minimal_primes(I))
    sym = symbolic_power_min(I, k)
    sym_bound = max(saturation_chain(power(Q, k)).sat for supp, Q in groups if supp in minimal)
    inst.check("sat(I^(k)) <= max sat(Q_i^k) at minimal primes", True,
               saturation_chain(sym).sat <= sym_bound)
    cmp = compare_powers(I, k)
    inst.check("power comparison statements", [], list(cmp.violations))
    return I


_RUNNERS: dict[str, Callable[[random.Random, VerifyConfig, Instance], MonomialIdeal]] = {
    "irreducible": _irreducible,
    "stable": _stable,
    "stable_m_primary": _stable_m_primary,
    "two_var": _two_var,
    "m_primary": _m_primary,
    "equigenerated_m_primary": _equigenerated,
    "squarefree": _squarefree,
    "general": _general,
}


def run_instance(cfg: VerifyConfig, index: int) -> Instance:
    rng = random.Random(f"{cfg.family}:{cfg.seed}:{index}")
    inst = Instance(index=index, ideal="", k=None)
    I = _RUNNERS[cfg.family](rng, cfg, inst)
    inst.ideal = format_ideal(I)
    return inst


def run_verify(cfg: VerifyConfig, only: int | None = None) -> dict[str, Any]:
    """Run the harness; the report is a plain dict, stable for identical configs."""
    indices = [only] if only is not None else range(cfg.instances)
    instances = [run_instance(cfg, i) for i in indices]
    failures = [i for i in instances if i.failed]
    summary: dict[str, Any] = {
        "instances": len(instances),
        "checks": sum(len(i.checks) for i in instances),
        "failed_checks": sum(len(i.failed) for i in failures),
        "failed_instances": [i.index for i in failures],
    }
    observed = [i.observations for i in instances if i.observations]
    if observed:
        total = len(observed)
        summary["observations"] = {
            "count": total,
            "sat_equality": sum(o["equal"] for o in observed),
            "sat_equality_rate": round(sum(o["equal"] for o in observed) / total, 6),
            "m_in_Ik_colon_m_tk": sum(o["m_in_Ik_colon_m_tk"] for o in observed),
            "s_k_below_tk": sum(o["s_k_below_tk"] for o in observed),
        }
    reproduce = {
        i.index: f"verify --family {cfg.family} --seed {cfg.seed} --n-max {cfg.n_max} "
                 f"--exp-max {cfg.exp_max} --gens-max {cfg.gens_max} --k-max {cfg.k_max} --only {i.index}"
        for i in instances
    }
    return {
        "config": asdict(cfg),
        "summary": summary,
        "ok": not failures,
        "instances": [
            {**asdict(i), "reproduce": reproduce[i.index]} for i in instances
        ],
    }


def render_text(report: dict[str, Any], quiet: bool = False) -> str:
    cfg, summary = report["config"], report["summary"]
    lines = [
        f"family {cfg['family']} seed {cfg['seed']}: {summary['instances']} instances, "
        f"{summary['checks']} checks, {summary['failed_checks']} failed"
    ]
    if "observations" in summary:
        o = summary["observations"]
        lines.append(
            f"sat(I^k) = sat(I^{{k}}) on {o['sat_equality']}/{o['count']} "
            f"(rate {o['sat_equality_rate']:.6f}); m in I^k:m^t_k on {o['m_in_Ik_colon_m_tk']}/{o['count']}; "
            f"s_k < t_k on {o['s_k_below_tk']}/{o['count']}"
        )
    for inst in report["instances"]:
        bad = [c for c in inst["checks"] if not c["ok"]]
        if bad:
            lines.append(f"FAIL #{inst['index']} k={inst['k']} {inst['ideal']}")
            for c in bad:
                lines.append(f"  {c['name']}: expected {json.dumps(c['expected'])}, got {json.dumps(c['actual'])}")
            lines.append(f"  reproduce: {inst['reproduce']}")
        elif not quiet:
            lines.append(f"ok   #{inst['index']} k={inst['k']} {inst['ideal']}")
    lines.append("PASS" if report["ok"] else "FAIL")
    return "\n".join(lines)
