"""JSON schemas for every document the command line writes; validated before output."""
import logging
from typing import Any, Dict

import jsonschema

from invariants.fixedRing import INCONCLUSIVE, NOT_FREE, NOT_REGULAR, REGULAR, SCHEMA_ID
from utils.errors import HopfEngineError

logger = logging.getLogger(__name__)

CYCLOTOMIC = {
    "type": "object",
    "required": ["conductor", "coefficients"],
    "properties": {
        "conductor": {"type": "integer", "minimum": 1},
        "coefficients": {"type": "array", "items": {"type": "string"}},
    },
}

MATRIX = {"type": "array", "items": {"type": "array", "items": CYCLOTOMIC}}

_HEADER = {
    "schema": {"const": SCHEMA_ID},
    "kind": {"type": "string"},
    "algebra": {"type": "string"},
    "family": {"type": "string"},
    "hopf_parameters": {"type": "object", "additionalProperties": {"type": "integer"}},
}

CATALOG_SCHEMA = {
    "type": "object",
    "required": ["schema", "kind", "algebra", "family", "hopf_parameters", "dimension", "irreducibles"],
    "properties": {
        **_HEADER,
        "kind": {"const": "catalog"},
        "dimension": {"type": "integer"},
        "irreducibles": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["label", "dimension", "is_module", "matrices"],
                "properties": {
                    "label": {"type": "string"},
                    "dimension": {"enum": [1, 2]},
                    "is_module": {"type": "boolean"},
                    "matrices": {"type": "object", "additionalProperties": MATRIX},
                },
            },
        },
    },
}

FUSION_SCHEMA = {
    "type": "object",
    "required": ["schema", "kind", "algebra", "labels", "dimensions", "structure_constants", "commutative"],
    "properties": {
        **_HEADER,
        "kind": {"const": "fusion"},
        "labels": {"type": "array", "items": {"type": "string"}},
        "dimensions": {"type": "array", "items": {"type": "integer"}},
        "structure_constants": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}},
        },
        "commutative": {"type": "boolean"},
        "mismatches": {"type": "array", "items": {"type": "string"}},
    },
}

INNER_FAITHFUL_SCHEMA = {
    "type": "object",
    "required": ["schema", "kind", "algebra", "module", "closure", "inner_faithful"],
    "properties": {
        **_HEADER,
        "kind": {"const": "inner-faithful"},
        "module": {"type": "array", "items": {"type": "string"}},
        "closure": {"type": "array", "items": {"type": "string"}},
        "inner_faithful": {"type": "boolean"},
        "criterion": {"type": ["boolean", "null"]},
        "criterion_values": {"type": "object"},
        "hopf_ideal_witness": {"type": ["string", "null"]},
    },
}

INVARIANT_SCHEMA = {
    "type": "object",
    "required": ["schema", "algebra", "family", "max_degree", "degrees", "generators", "hilbert_prefix", "certificate"],
    "properties": {
        **_HEADER,
        "parameters": {"type": "object"},
        "max_degree": {"type": "integer", "minimum": 2},
        "degrees": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "generators": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["degree", "text", "coefficients"],
                "properties": {
                    "degree": {"type": "integer"},
                    "text": {"type": "string"},
                    "coefficients": {"type": "object", "additionalProperties": CYCLOTOMIC},
                },
            },
        },
        "hilbert_prefix": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "certificate": {"enum": [REGULAR, NOT_REGULAR, NOT_FREE, INCONCLUSIVE]},
        "certificate_detail": {"type": "string"},
        "product_of_degrees": {"type": "integer"},
        "dim_H": {"type": "integer"},
        "conjecture_product_holds": {"type": ["boolean", "null"]},
        "inner_faithful": {"type": ["boolean", "null"]},
        "faithful": {"type": ["boolean", "null"]},
    },
}

VERIFY_SCHEMA = {
    "type": "object",
    "required": ["schema", "kind", "passed", "outcomes"],
    "properties": {
        "schema": {"const": SCHEMA_ID},
        "kind": {"const": "verify"},
        "passed": {"type": "boolean"},
        "outcomes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["case_id", "parameter", "value", "passed", "expected", "observed"],
                "properties": {
                    "case_id": {"type": "string"},
                    "parameter": {"type": "string"},
                    "value": {"type": "integer"},
                    "passed": {"type": "boolean"},
                    "expected": {"type": "string"},
                    "observed": {"type": "string"},
                    "detail": {"type": "string"},
                },
            },
        },
    },
}

SCHEMAS: Dict[str, Dict[str, Any]] = {
    "catalog": CATALOG_SCHEMA,
    "fusion": FUSION_SCHEMA,
    "inner-faithful": INNER_FAITHFUL_SCHEMA,
    "invariants": INVARIANT_SCHEMA,
    "verify": VERIFY_SCHEMA,
}


def validate_document(document: Dict[str, Any], kind: str) -> None:
    """Raise HopfEngineError if the document does not match the schema of its kind."""
    schema = SCHEMAS[kind]
    try:
        jsonschema.validate(instance=document, schema=schema)
    except jsonschema.ValidationError as e:
        logger.error(f"Error validating {kind} document: {e.message}")
        raise HopfEngineError(f"{kind} document does not match {SCHEMA_ID}: {e.message}") from e
