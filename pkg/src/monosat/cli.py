"""Command-line interface: ``monosat <command> ...``.

Exit status is 0 on success, 1 when a proven statement fails to hold and
2 for unreadable input or bad arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import Any

from .core import MonomialIdeal, format_ideal, power
from .decomp import (
    irreducible_decomposition,
    is_m_primary,
    minimal_primes,
    primary_decomposition,
)
from .io import GeneratorsReducedWarning, IdealDocument, IdealSyntaxError, ideal_to_json_obj, read_ideal
from .powers import bracket_symbolic_power, compare_powers, symbolic_power_min
from .sat import sat_upper_bound, saturation_chain
from .stability import stability_class, stable_closure
from .verify import FAMILIES, VerifyConfig, render_text, run_verify


class InputError(Exception):
    pass


def _load(path: str) -> IdealDocument:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", GeneratorsReducedWarning)
        try:
            doc = read_ideal(path)
        except OSError as exc:
            raise InputError(f"{path}: {exc.strerror}") from None
        except (IdealSyntaxError, OverflowError, ValueError) as exc:
            raise InputError(f"{path}: {exc}") from None
    for w in caught:
        print(f"warning: {path}: {w.message}", file=sys.stderr)
    return doc


def _proper(doc: IdealDocument, what: str) -> MonomialIdeal:
    I = doc.ideal()
    if I.is_zero() or I.is_unit():
        raise InputError(f"{what} needs a proper non-zero ideal")
    return I


def _supports(supps) -> list[list[int]]:
    return [sorted(s) for s in supps]


def cmd_sat(args, doc: IdealDocument) -> tuple[dict[str, Any], str, int]:
    report = saturation_chain(doc.ideal())
    show_chain = args.chain and not args.quiet
    out: dict[str, Any] = {
        "command": "sat",
        "input": doc.to_json_obj(),
        "sat": report.sat,
        "saturation": ideal_to_json_obj(report.saturation),
    }
    lines = [f"sat: {report.sat}", f"saturation: {format_ideal(report.saturation)}"]
    if show_chain:
        out["chain"] = [ideal_to_json_obj(J) for J in report.chain]
        lines.append("chain:")
        lines += [f"  I:m^{i} = {format_ideal(J)}" for i, J in enumerate(report.chain)]
    return out, "\n".join(lines), 0


def cmd_decompose(args, doc: IdealDocument):
    I = _proper(doc, "decompose")
    dec = irreducible_decomposition(I)
    groups = primary_decomposition(I)
    out = {
        "command": "decompose",
        "input": doc.to_json_obj(),
        "components": [list(q.exponents) for q in dec],
        "primary": [{"support": sorted(s), "ideal": ideal_to_json_obj(Q)} for s, Q in groups],
        "minimal_primes": _supports(minimal_primes(I)),
        "m_primary": is_m_primary(I),
        "sat_upper_bound": sat_upper_bound(I),
    }
    lines = ["irreducible components:"]
    lines += [f"  {q}" for q in dec]
    lines.append("primary components:")
    lines += [f"  support {sorted(s)}: {format_ideal(Q)}" for s, Q in groups]
    lines.append(f"minimal primes: {_supports(minimal_primes(I))}")
    lines.append(f"m-primary: {str(out['m_primary']).lower()}")
    lines.append(f"sat upper bound: {out['sat_upper_bound']}")
    return out, "\n".join(lines), 0


def cmd_power(args, doc: IdealDocument):
    P = power(doc.ideal(), args.k)
    out = {"command": "power", "input": doc.to_json_obj(), "k": args.k, "result": ideal_to_json_obj(P)}
    return out, format_ideal(P), 0


def cmd_symbolic(args, doc: IdealDocument):
    I = _proper(doc, "symbolic")
    if args.k < 1:
        raise InputError("symbolic powers need k >= 1")
    fn = symbolic_power_min if args.kind == "min" else bracket_symbolic_power
    P = fn(I, args.k)
    out = {
        "command": "symbolic",
        "input": doc.to_json_obj(),
        "k": args.k,
        "kind": args.kind,
        "result": ideal_to_json_obj(P),
    }
    return out, format_ideal(P), 0


def cmd_stability(args, doc: IdealDocument):
    I = doc.ideal()
    if I.is_zero():
        raise InputError("stability needs a non-zero ideal")
    cls = stability_class(I)
    out = {"command": "stability", "input": doc.to_json_obj(), "class": str(cls)}
    return out, str(cls), 0


def cmd_closure(args, doc: IdealDocument):
    if not doc.gens:
        raise InputError("closure needs at least one monomial")
    C = stable_closure(doc.gens, doc.n, strong=args.strong)
    out = {"command": "closure", "input": doc.to_json_obj(), "strong": args.strong, "result": ideal_to_json_obj(C)}
    return out, format_ideal(C), 0


def cmd_compare(args, doc: IdealDocument):
    I = _proper(doc, "compare")
    if args.k < 1:
        raise InputError("compare needs k >= 1")
    c = compare_powers(I, args.k)
    out = {
        "command": "compare",
        "input": doc.to_json_obj(),
        "k": c.k,
        "m_primary": c.m_primary,
        "contains": c.contains,
        "sat_ordinary": c.sat_ordinary,
        "sat_bracket": c.sat_bracket,
        "sat_bound_bracket": c.sat_bound_bracket,
        "violations": list(c.violations),
    }
    lines = [
        f"k: {c.k}",
        f"m-primary: {str(c.m_primary).lower()}",
        f"I^k inside I^{{k}}: {str(c.contains).lower()}",
        f"sat(I^k): {c.sat_ordinary}",
        f"sat(I^{{k}}): {c.sat_bracket}",
        f"max sat(q_i^k): {c.sat_bound_bracket}",
    ]
    lines += [f"VIOLATION: {v}" for v in c.violations]
    return out, "\n".join(lines), 0 if c.ok else 1


def cmd_verify(args):
    try:
        cfg = VerifyConfig(
            family=args.family,
            seed=args.seed,
            instances=args.instances,
            n_max=args.n_max,
            exp_max=args.exp_max,
            gens_max=args.gens_max,
            k_max=args.k_max,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.only is not None and args.only < 0:
        raise InputError("--only must be non-negative")
    report = run_verify(cfg, only=args.only)
    out = {"command": "verify", **report}
    return out, render_text(report, quiet=args.quiet), 0 if report["ok"] else 1


_FILE_COMMANDS = {
    "sat": cmd_sat,
    "decompose": cmd_decompose,
    "power": cmd_power,
    "symbolic": cmd_symbolic,
    "stability": cmd_stability,
    "closure": cmd_closure,
    "compare": cmd_compare,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit structured JSON output")
    common.add_argument("--quiet", action="store_true", help="suppress chains and per-instance lines")

    parser = argparse.ArgumentParser(prog="monosat", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def file_cmd(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help, parents=[common])
        p.add_argument("file", help="ideal file (text grammar or JSON)")
        return p

    p = file_cmd("sat", "saturation number and saturation")
    p.add_argument("--chain", action="store_true", help="print the colon chain")
    file_cmd("decompose", "irreducible and primary decomposition")
    p = file_cmd("power", "ordinary power")
    p.add_argument("-k", type=int, required=True)
    p = file_cmd("symbolic", "symbolic power")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--kind", choices=("min", "bracket"), default="min")
    file_cmd("stability", "stable / strongly stable classification")
    p = file_cmd("closure", "smallest (strongly) stable ideal containing the generators")
    p.add_argument("--strong", action="store_true")
    p = file_cmd("compare", "ordinary versus bracket symbolic power")
    p.add_argument("-k", type=int, required=True)

    p = sub.add_parser("verify", help="randomized formula-versus-oracle checks", parents=[common])
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instances", type=int, default=100)
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--exp-max", type=int, default=4)
    p.add_argument("--gens-max", type=int, default=4)
    p.add_argument("--k-max", type=int, default=3)
    p.add_argument("--only", type=int, help="run a single instance by index")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.command == "verify":
            out, text, status = cmd_verify(args)
        else:
            if getattr(args, "k", 0) is not None and getattr(args, "k", 0) < 0:
                raise InputError("k must be non-negative")
            doc = _load(args.file)
            out, text, status = _FILE_COMMANDS[args.command](args, doc)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(out, sort_keys=True) if args.json else text)
    return status


if __name__ == "__main__":
    sys.exit(main())
