"""Reading and writing ideals.

Text grammar (whitespace insignificant, variables 1-indexed)::

    ideal    := "n=" INT ";" [monomial ("," monomial)*]
    monomial := term ("*" term)* | "1"
    term     := "x" INT ("^" INT)?

Lines starting with ``#`` are comments; ``# name: LABEL`` names the ideal.
The structured form is JSON: ``{"n": INT, "gens": [[INT, ...], ...], "name": STR}``.
"""

from __future__ import annotations

import json
import re
import warnings
from dataclasses import dataclass
from typing import Any

from .core import MonomialIdeal, format_ideal, minimalize, monomial


class IdealSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class GeneratorsReducedWarning(UserWarning):
    """Input generators were not minimal and have been reduced."""


@dataclass(frozen=True)
class IdealDocument:
    n: int
    gens: tuple[tuple[int, ...], ...]
    name: str | None = None

    @classmethod
    def from_ideal(cls, I: MonomialIdeal, name: str | None = None) -> IdealDocument:
        return cls(I.n, I.gens, name)

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.n, self.gens)

    def to_json_obj(self) -> dict[str, Any]:
        obj: dict[str, Any] = {"n": self.n, "gens": [list(u) for u in self.gens]}
        if self.name is not None:
            obj["name"] = self.name
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    def to_text(self) -> str:
        head = f"# name: {self.name}\n" if self.name is not None else ""
        return head + format_ideal(self.ideal()) + "\n"


_INT = re.compile(r"\d+")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def where(self, pos: int | None = None) -> tuple[int, int]:
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, message: str, pos: int | None = None) -> IdealSyntaxError:
        return IdealSyntaxError(message, *self.where(pos))

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self, lit: str) -> bool:
        self.skip_ws()
        return self.text.startswith(lit, self.pos)

    def expect(self, lit: str) -> None:
        if not self.peek(lit):
            raise self.error(f"expected {lit!r}")
        self.pos += len(lit)

    def integer(self) -> int:
        self.skip_ws()
        m = _INT.match(self.text, self.pos)
        if not m:
            raise self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())


def _strip_comments(text: str) -> tuple[str, str | None]:
    name = None
    lines = []
    for line in text.split("\n"):
        stripped = line.strip()
        if stripped.startswith("#"):
            m = re.match(r"#\s*name:\s*(.*)$", stripped)
            if m and name is None:
                name = m.group(1).strip()
            lines.append("")  # keep line numbers stable
        else:
            lines.append(line)
    return "\n".join(lines), name


def _parse_monomial(sc: _Scanner, n: int) -> tuple[int, ...]:
    start = sc.pos
    sc.skip_ws()
    if sc.peek("1"):
        sc.pos += 1
        return (0,) * n
    exps = [0] * n
    while True:
        sc.expect("x")
        var_pos = sc.pos
        i = sc.integer()
        if not 1 <= i <= n:
            raise sc.error(f"variable x{i} outside x1..x{n}", var_pos)
        e = 1
        if sc.peek("^"):
            sc.pos += 1
            e = sc.integer()
        exps[i - 1] += e
        if not sc.peek("*"):
            break
        sc.pos += 1
    try:
        return monomial(exps, n)
    except OverflowError as exc:
        raise OverflowError(f"{exc} (at line {sc.where(start)[0]})") from None


def parse_text(text: str) -> IdealDocument:
    body, name = _strip_comments(text)
    sc = _Scanner(body)
    sc.expect("n")
    sc.expect("=")
    n_pos = sc.pos
    n = sc.integer()
    if n < 1:
        raise sc.error("ambient dimension must be positive", n_pos)
    sc.expect(";")
    gens = []
    if not sc.at_end():
        gens.append(_parse_monomial(sc, n))
        while sc.peek(","):
            sc.pos += 1
            gens.append(_parse_monomial(sc, n))
    if not sc.at_end():
        raise sc.error("unexpected trailing input")
    return _canonical(n, gens, name)


def parse_json(text: str) -> IdealDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise IdealSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(obj, dict) or not isinstance(obj.get("n"), int) or not isinstance(obj.get("gens"), list):
        raise IdealSyntaxError('expected an object with integer "n" and list "gens"', 1, 1)
    n = obj["n"]
    if n < 1:
        raise IdealSyntaxError("ambient dimension must be positive", 1, 1)
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise IdealSyntaxError('"name" must be a string', 1, 1)
    gens = []
    for g in obj["gens"]:
        if not isinstance(g, list) or not all(isinstance(e, int) and not isinstance(e, bool) for e in g):
            raise IdealSyntaxError(f"generator {g!r} is not a list of integers", 1, 1)
        gens.append(monomial(g, n))
    return _canonical(n, gens, name)


def _canonical(n: int, gens: list[tuple[int, ...]], name: str | None) -> IdealDocument:
    I = minimalize(gens, n)
    if len(I.gens) != len(gens):
        warnings.warn(
            f"{len(gens)} generators reduced to {len(I.gens)} minimal generators",
            GeneratorsReducedWarning,
            stacklevel=3,
        )
    return IdealDocument(n, I.gens, name)


def parse_ideal(text: str) -> IdealDocument:
    """Parse either format; JSON is recognized by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def read_ideal(path: str) -> IdealDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_ideal(fh.read())


def ideal_to_json_obj(I: MonomialIdeal) -> dict[str, Any]:
    return {"n": I.n, "gens": [list(u) for u in I.gens]}
