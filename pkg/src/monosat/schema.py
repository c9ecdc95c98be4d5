"""JSON Schema (draft 2020-12) for ``monosat --json`` output."""

_IDEAL = {
    "type": "object",
    "required": ["n", "gens"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "gens": {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}},
        "name": {"type": "string"},
    },
    "additionalProperties": False,
}

_SUPPORT = {"type": "array", "items": {"type": "integer", "minimum": 1}}


def _command(name: str, required: dict, optional: dict | None = None) -> dict:
    props = {"command": {"const": name}, **required, **(optional or {})}
    return {
        "type": "object",
        "properties": props,
        "required": ["command", *required],
        "additionalProperties": False,
    }


_COUNT = {"type": "integer", "minimum": 0}
_K = {"type": "integer", "minimum": 0}

OUTPUT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$defs": {"ideal": _IDEAL},
    "oneOf": [
        _command("sat", {"input": _IDEAL, "sat": _COUNT, "saturation": _IDEAL},
                 {"chain": {"type": "array", "items": _IDEAL}}),
        _command("decompose", {
            "input": _IDEAL,
            "components": {"type": "array", "items": {"type": "array", "items": _COUNT}},
            "primary": {"type": "array", "items": {
                "type": "object",
                "required": ["support", "ideal"],
                "properties": {"support": _SUPPORT, "ideal": _IDEAL},
                "additionalProperties": False,
            }},
            "minimal_primes": {"type": "array", "items": _SUPPORT},
            "m_primary": {"type": "boolean"},
            "sat_upper_bound": _COUNT,
        }),
        _command("power", {"input": _IDEAL, "k": _K, "result": _IDEAL}),
        _command("symbolic", {"input": _IDEAL, "k": _K, "kind": {"enum": ["min", "bracket"]}, "result": _IDEAL}),
        _command("stability", {"input": _IDEAL, "class": {"enum": ["not_stable", "stable", "strongly_stable"]}}),
        _command("closure", {"input": _IDEAL, "strong": {"type": "boolean"}, "result": _IDEAL}),
        _command("compare", {
            "input": _IDEAL,
            "k": _K,
            "m_primary": {"type": "boolean"},
            "contains": {"type": "boolean"},
            "sat_ordinary": _COUNT,
            "sat_bracket": _COUNT,
            "sat_bound_bracket": _COUNT,
            "violations": {"type": "array", "items": {"type": "string"}},
        }),
        _command("verify", {
            "config": {"type": "object"},
            "summary": {
                "type": "object",
                "required": ["instances", "checks", "failed_checks", "failed_instances"],
            },
            "ok": {"type": "boolean"},
            "instances": {"type": "array", "items": {
                "type": "object",
                "required": ["index", "ideal", "k", "checks", "observations", "reproduce"],
                "properties": {
                    "checks": {"type": "array", "items": {
                        "type": "object",
                        "required": ["name", "expected", "actual", "ok"],
                    }},
                },
            }},
        }),
    ],
}
