"""JSON schema for audit scenario files."""
from __future__ import annotations

SCHEMA_VERSION = 1

RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"}
INT_OR_RATIONAL = {"anyOf": [{"type": "integer"}, RATIONAL]}
RADICAL = {
    "type": "object",
    "propertyNames": {"pattern": r"^[A-Za-z0-9_]+$", "not": {"enum": ["ref", "root_disc_of", "product", "disc_of_step"]}},
    "additionalProperties": INT_OR_RATIONAL,
}
EXPR = {
    "anyOf": [
        RADICAL,
        {"type": "object", "required": ["ref"], "properties": {"ref": {"type": "string"}}, "additionalProperties": False},
        {
            "type": "object",
            "required": ["root_disc_of"],
            "properties": {"root_disc_of": {"type": "string"}},
            "additionalProperties": False,
        },
        {
            "type": "object",
            "required": ["disc_of_step"],
            "properties": {"disc_of_step": {"type": "string"}},
            "additionalProperties": False,
        },
        {
            "type": "object",
            "required": ["product"],
            "properties": {"product": {"type": "array", "items": {"$ref": "#/$defs/expr"}, "minItems": 1}},
            "additionalProperties": False,
        },
    ]
}
VIOLATION = {
    "type": "object",
    "required": ["bound", "prime", "expect"],
    "properties": {
        "bound": {"$ref": "#/$defs/expr"},
        "prime": {"type": "integer", "minimum": 2},
        "expect": {"enum": ["violates", "satisfies"]},
    },
    "additionalProperties": False,
}
APPROX = {
    "type": "object",
    "required": ["digits", "text"],
    "properties": {"digits": {"type": "integer", "minimum": 1, "maximum": 50}, "text": {"type": "string"}},
    "additionalProperties": False,
}
POS = {"type": "integer", "minimum": 1}
NONNEG = {"type": "integer", "minimum": 0}


def _check(type_name: str, required: list[str], props: dict) -> dict:
    base = {
        "id": {"type": "string", "pattern": r"^[A-Za-z0-9_.-]+$"},
        "type": {"const": type_name},
        "cite": {"type": "string"},
        "as": {"type": "string"},
        "uses": {"type": "array", "items": {"type": "string"}},
        "strict": {"type": "boolean"},
    }
    return {
        "type": "object",
        "required": ["id", "type", "cite"] + required,
        "properties": {**base, **props},
        "additionalProperties": False,
    }


CHECKS = {
    "fontaine_bound": _check(
        "fontaine_bound",
        ["p", "i", "ell", "expect"],
        {"delta_K": {"$ref": "#/$defs/expr"}, "p": POS, "i": INT_OR_RATIONAL, "ell": POS,
         "expect": {"$ref": "#/$defs/expr"}, "approx": APPROX},
    ),
    "odlyzko_cap": _check(
        "odlyzko_cap",
        ["delta", "mode", "cap_at_most"],
        {"delta": {"$ref": "#/$defs/expr"}, "mode": {"enum": ["grh", "unconditional"]}, "cap_at_most": POS,
         "relative_to_degree": POS, "relative_at_most": NONNEG, "excludes_degree": POS},
    ),
    "root_disc": _check(
        "root_disc", ["field", "expect"], {"field": {"type": "string"}, "expect": {"$ref": "#/$defs/expr"}}
    ),
    "tame_extend": _check(
        "tame_extend",
        ["base", "increments", "expect"],
        {"base": {"$ref": "#/$defs/expr"},
         "increments": {"type": "array", "minItems": 1, "items": {"type": "string"}},
         "expect": {"$ref": "#/$defs/expr"}, "approx": APPROX, "violation": VIOLATION},
    ),
    "conductor_discriminant": _check(
        "conductor_discriminant",
        ["step", "expect"],
        {"step": {"type": "string"}, "expect": {"$ref": "#/$defs/expr"}, "prime_degree": POS},
    ),
    "extend_root_disc": _check(
        "extend_root_disc",
        ["base", "rel_disc", "degree_L"],
        {"base": {"$ref": "#/$defs/expr"}, "rel_disc": {"$ref": "#/$defs/expr"}, "degree_L": POS,
         "expect": {"$ref": "#/$defs/expr"}, "violation": VIOLATION},
    ),
    "local_increment": _check(
        "local_increment",
        ["base", "prime", "step", "label", "f", "g", "deg_K", "local_degree", "expect"],
        {"base": {"$ref": "#/$defs/expr"}, "prime": POS, "step": {"type": "string"}, "label": {"type": "string"},
         "f": POS, "g": POS, "deg_K": POS, "local_degree": POS, "expect": {"$ref": "#/$defs/expr"}},
    ),
    "level": _check(
        "level",
        ["step"],
        {"step": {"type": "string"}, "expect_u_max": INT_OR_RATIONAL, "expect_i_max": INT_OR_RATIONAL,
         "level": INT_OR_RATIONAL, "expect_is_level": {"type": "boolean"},
         "expect_different": INT_OR_RATIONAL, "expect_disc_valuation": INT_OR_RATIONAL},
    ),
    "group": _check(
        "group",
        ["preset", "property", "expect"],
        {"preset": {"type": "string"},
         "property": {"enum": ["order", "conjugacy_data", "degree_partition", "solvable_caps",
                              "normal_subgroup_orders", "normal_cyclic_subgroup_orders",
                              "quotient_isomorphic", "gl2_traces"]},
         "args": {"type": "object"}, "expect": {}},
    ),
    "f2s3_module": _check(
        "f2s3_module",
        ["sigma", "tau", "expect_semisimple"],
        {"sigma": {"type": "array"}, "tau": {"type": "array"}, "expect_semisimple": {"type": "boolean"}},
    ),
    "fixed_space": _check(
        "fixed_space",
        ["generators", "dim", "expect_dim"],
        {"generators": {"type": "array", "minItems": 1}, "dim": POS, "expect_dim": NONNEG},
    ),
    "conductor_cases": _check(
        "conductor_cases",
        ["c", "expect"],
        {"c": NONNEG, "g": POS, "require_u_positive": {"type": "boolean"}, "delta_zero": {"type": "boolean"},
         "expect": {"type": "array", "items": {"type": "array", "minItems": 3, "maxItems": 3}}},
    ),
    "conductor_exponent": _check(
        "conductor_exponent", ["u", "t", "delta", "expect"],
        {"u": NONNEG, "t": NONNEG, "delta": INT_OR_RATIONAL, "expect": INT_OR_RATIONAL},
    ),
    "wild_mass_bound": _check(
        "wild_mass_bound", ["delta", "min_codim", "expect"],
        {"delta": INT_OR_RATIONAL, "min_codim": POS, "expect": INT_OR_RATIONAL},
    ),
    "mestre": _check("mestre", ["N", "g", "expect"], {"N": POS, "g": POS, "expect": {"type": "boolean"}}),
}

STEPS = {
    "filtration": {
        "type": "object",
        "required": ["id", "kind", "orders"],
        "properties": {
            "id": {"type": "string"}, "kind": {"const": "filtration"},
            "orders": {"type": "array", "items": POS, "minItems": 1},
            "residue_degree": POS, "total_group_order": POS, "note": {"type": "string"},
        },
        "additionalProperties": False,
    },
    "tame": {
        "type": "object",
        "required": ["id", "kind", "prime", "f", "g", "deg_K"],
        "properties": {
            "id": {"type": "string"}, "kind": {"const": "tame"}, "prime": POS,
            "f": POS, "g": POS, "deg_K": POS, "e_prime": {"anyOf": [POS, {"type": "null"}]},
            "note": {"type": "string"},
        },
        "additionalProperties": False,
    },
    "characters": {
        "type": "object",
        "required": ["id", "kind", "entries"],
        "properties": {
            "id": {"type": "string"}, "kind": {"const": "characters"}, "degree": POS,
            "entries": {
                "type": "array", "minItems": 1,
                "items": {
                    "type": "object", "required": ["conductor", "multiplicity"],
                    "properties": {"conductor": RADICAL, "multiplicity": POS},
                    "additionalProperties": False,
                },
            },
            "note": {"type": "string"},
        },
        "additionalProperties": False,
    },
    "fact": {
        "type": "object",
        "required": ["id", "kind", "fact_kind", "payload", "provenance"],
        "properties": {
            "id": {"type": "string"}, "kind": {"const": "fact"},
            "fact_kind": {"enum": ["ray-class-degree", "galois-image", "rep-type"]},
            "payload": {"type": "object"}, "provenance": {"type": "string"},
        },
        "additionalProperties": False,
    },
}

SCENARIO_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema_version", "name", "labels", "fields", "steps", "checks"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "name": {"type": "string"},
        "description": {"type": "string"},
        "labels": {
            "type": "object",
            "propertyNames": {"pattern": r"^[A-Za-z_][A-Za-z0-9_]*$"},
            "additionalProperties": {
                "type": "object", "required": ["p", "f"],
                "properties": {"p": POS, "f": POS, "field": {"type": "string"}, "note": {"type": "string"}},
                "additionalProperties": False,
            },
        },
        "fields": {
            "type": "array",
            "items": {
                "type": "object", "required": ["name", "degree"],
                "properties": {"name": {"type": "string"}, "degree": POS, "disc": RADICAL,
                               "note": {"type": "string"}},
                "additionalProperties": False,
            },
        },
        "steps": {"type": "array", "items": {"$ref": "#/$defs/step"}},
        "checks": {"type": "array", "items": {"$ref": "#/$defs/check"}},
    },
    "additionalProperties": False,
    "$defs": {
        "expr": EXPR,
        "step": {
            "type": "object",
            "required": ["kind"],
            "properties": {"kind": {"enum": sorted(STEPS)}},
            "allOf": [{"if": {"properties": {"kind": {"const": k}}}, "then": v} for k, v in STEPS.items()],
        },
        "check": {
            "type": "object",
            "required": ["type"],
            "properties": {"type": {"enum": sorted(CHECKS)}},
            "allOf": [{"if": {"properties": {"type": {"const": k}}}, "then": v} for k, v in CHECKS.items()],
        },
    },
}
