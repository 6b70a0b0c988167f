"""JSON Schema for the CLI output envelope and each command's result payload."""

STATUSES = ("ok", "violation", "resource-limit", "usage-error")

_int = {"type": "integer"}
_bool = {"type": "boolean"}
_str = {"type": "string"}
_nullable_str = {"type": ["string", "null"]}
_int_list = {"type": "array", "items": _int}

BREAKDOWN = {
    "type": "object",
    "required": ["n", "m", "value", "regime", "alpha", "beta", "gamma", "branch", "s"],
    "properties": {
        "n": _int, "m": _int, "value": _int, "beta": _int, "s": _int,
        "regime": {"enum": ["trivial-n2", "small-wheel", "mid-wheel", "large-wheel"]},
        "branch": {"enum": ["alpha-le-gamma", "alpha-gt-gamma", "not-applicable"]},
        "alpha": {"type": "string", "pattern": r"^\d+(/\d+)?$"},
        "gamma": {"type": "string", "pattern": r"^\d+(/\d+)?$"},
    },
    "additionalProperties": False,
}

SEARCH_REPORT = {
    "type": "object",
    "required": ["n", "m", "t", "verified", "graphs_enumerated", "counterexample"],
    "properties": {
        "n": _int, "m": _int, "t": _int, "verified": _bool,
        "graphs_enumerated": _int, "counterexample": _nullable_str,
        "elapsed": {"type": "number"},
    },
    "additionalProperties": False,
}

WITNESS_REPORT = {
    "type": "object",
    "required": ["path_free", "wheel_free", "cross_checked"],
    "properties": {"path_free": _bool, "wheel_free": _bool, "cross_checked": _bool},
    "additionalProperties": False,
}

PARTITION = {
    "type": "object",
    "required": ["n", "m", "t", "parts"],
    "properties": {"n": _int, "m": _int, "t": _int, "parts": _int_list},
    "additionalProperties": False,
}

RESULT_SCHEMAS = {
    "compute": {
        "type": "object",
        "required": ["family", "value"],
        "properties": {
            "family": {"enum": ["wheel", "path", "cycle"]},
            "value": _int,
            "breakdown": BREAKDOWN,
        },
        "additionalProperties": False,
    },
    "table": {
        "type": "object",
        "required": ["m_min", "m_max", "rows", "s_bound"],
        "properties": {
            "m_min": _int,
            "m_max": _int,
            "rows": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["n", "values"],
                    "properties": {"n": _int, "values": _int_list},
                    "additionalProperties": False,
                },
            },
            "s_bound": {
                "type": "object",
                "required": ["n", "s"],
                "properties": {"n": _int_list, "s": _int_list},
                "additionalProperties": False,
            },
        },
        "additionalProperties": False,
    },
    "witness": {
        "type": "object",
        "required": ["partition"],
        "properties": {"partition": PARTITION, "graph6": _str},
        "additionalProperties": False,
    },
    "verify-witness": {
        "type": "object",
        "required": ["partition", "report"],
        "properties": {"partition": PARTITION, "report": WITNESS_REPORT},
        "additionalProperties": False,
    },
    "verify-upper": SEARCH_REPORT,
    "confirm": {
        "type": "object",
        "required": ["n", "m", "R", "upper_verified", "witness", "witness_verified", "upper"],
        "properties": {
            "n": _int, "m": _int, "R": _int, "upper_verified": _bool,
            "witness": _int_list, "witness_verified": _bool, "upper": SEARCH_REPORT,
        },
        "additionalProperties": False,
    },
    "lemma-suite": {
        "type": "object",
        "required": [
            "lemma", "corpus", "instances", "hypothesis_true", "violations",
            "resource_errors", "starved", "attempts",
        ],
        "properties": {
            "lemma": _str, "corpus": _str, "instances": _int, "hypothesis_true": _int,
            "violations": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["lemma", "graph6"],
                    "properties": {
                        "lemma": _str, "graph6": _str, "graph2_graph6": _str,
                        "x": _int, "y": _int, "n": _int, "m": _int, "p": _int, "q": _int,
                        "X": _int_list, "X1": _int_list, "X2": _int_list, "R": _int_list,
                    },
                    "additionalProperties": False,
                },
            },
            "resource_errors": _int, "starved": _int, "attempts": _int,
        },
        "additionalProperties": False,
    },
    "schema": {"type": "object"},
    "oracle-compare": {
        "type": "object",
        "required": ["pairs", "mismatches"],
        "properties": {
            "pairs": _int,
            "mismatches": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["n", "m", "formula", "oracle"],
                    "properties": {"n": _int, "m": _int, "formula": _int, "oracle": _int},
                    "additionalProperties": False,
                },
            },
        },
        "additionalProperties": False,
    },
}

ENVELOPE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "pathwheel CLI envelope",
    "type": "object",
    "required": ["command", "params", "status", "result"],
    "properties": {
        "command": {"type": ["string", "null"]},
        "params": {"type": "object"},
        "status": {"enum": list(STATUSES)},
        "result": {"type": "object"},
    },
    "additionalProperties": False,
}


ERROR_RESULT = {
    "type": "object",
    "required": ["error"],
    "properties": {"error": _str, "progress": {"type": "object"}},
    "additionalProperties": False,
}


def result_schema(command: str, status: str) -> dict:
    """Schema for ``result``: the command's payload on ok/violation, else an error body."""
    if status in ("usage-error", "resource-limit"):
        return ERROR_RESULT
    return RESULT_SCHEMAS[command]
