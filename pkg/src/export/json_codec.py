"""
JSON interchange format for feature models

    {"schema": 1, "name": "...", "features": [
        {"name": "...",
         "attributes": [{"key": "...", "values": ["..."]}],
         "decompositions": [{"kind": "and", "children": [...]},
                            {"kind": "select", "base": "...", "variations": [...]},
                            {"kind": "default", "target": "..."}],
         "constraints": [{"kind": "imply", "target": "..."}],
         "included_in": ["..."]}]}

Decoding never trusts the document: every problem becomes a SCHEMA
diagnostic carrying a JSON pointer to the offending value.
"""

import json
from typing import Any, Dict, List, Optional, Tuple

from featuremodel.diagnostics import Diagnostic, DiagnosticCode, Severity
from featuremodel.errors import SchemaError
from featuremodel.model import (
    Attribute,
    Constraint,
    ConstraintKind,
    Decomposition,
    DecompositionKind,
    Feature,
    FeatureModel,
)
from utils.logger import get_logger

logger = get_logger(__name__)

SCHEMA_VERSION = 1

MODEL_KEYS = ("schema", "name", "features")
FEATURE_KEYS = ("name", "attributes", "decompositions", "constraints", "included_in")
ATTRIBUTE_KEYS = ("key", "values")
CONSTRAINT_KEYS = ("kind", "target")
DECOMPOSITION_KEYS = {
    "group": ("kind", "children"),
    DecompositionKind.SELECT: ("kind", "base", "variations"),
    DecompositionKind.DEFAULT: ("kind", "target"),
}


def decomposition_to_dict(decomposition: Decomposition) -> Dict[str, Any]:
    if decomposition.kind.is_group:
        return {"kind": decomposition.kind.value, "children": list(decomposition.children)}
    if decomposition.kind is DecompositionKind.SELECT:
        return {
            "kind": decomposition.kind.value,
            "base": decomposition.base,
            "variations": list(decomposition.variations),
        }
    return {"kind": decomposition.kind.value, "target": decomposition.target}


def feature_to_dict(feature: Feature) -> Dict[str, Any]:
    return {
        "name": feature.name,
        "attributes": [{"key": a.key, "values": list(a.values)} for a in feature.attributes],
        "decompositions": [decomposition_to_dict(d) for d in feature.decompositions],
        "constraints": [{"kind": c.kind.value, "target": c.target} for c in feature.constraints],
        "included_in": list(feature.included_in),
    }


def model_to_dict(model: FeatureModel) -> Dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "name": model.name,
        "features": [feature_to_dict(f) for f in model.features],
    }


def to_json(model: FeatureModel) -> str:
    """Serialize with fixed key order and arrays in declaration order"""
    return json.dumps(model_to_dict(model), indent=2, ensure_ascii=False) + "\n"


class _Decoder:
    """Walks a parsed document, collecting diagnostics instead of raising"""

    def __init__(self):
        self.diagnostics: List[Diagnostic] = []

    def problem(self, path: str, message: str, code: DiagnosticCode = DiagnosticCode.SCHEMA):
        self.diagnostics.append(
            Diagnostic(Severity.ERROR, code, message, path=path or "/")
        )

    def object(self, value: Any, path: str, required: Tuple[str, ...]) -> Optional[Dict]:
        if not isinstance(value, dict):
            self.problem(path, f"expected an object, got {_type_name(value)}")
            return None
        for key in value:
            if key not in required:
                self.problem(f"{path}/{_escape(key)}", f"unknown field: {key}")
        missing = [key for key in required if key not in value]
        for key in missing:
            self.problem(path, f"missing field: {key}")
        return None if missing else value

    def string(self, value: Any, path: str) -> Optional[str]:
        if isinstance(value, str) and value:
            return value
        self.problem(path, f"expected a non-empty string, got {_type_name(value)}")
        return None

    def strings(self, value: Any, path: str, allow_empty: bool = True) -> Optional[Tuple[str, ...]]:
        if not isinstance(value, list):
            self.problem(path, f"expected an array, got {_type_name(value)}")
            return None
        if not value and not allow_empty:
            self.problem(path, "expected a non-empty array")
            return None
        items = [self.string(item, f"{path}/{i}") for i, item in enumerate(value)]
        if any(item is None for item in items):
            return None
        return tuple(items)  # type: ignore[arg-type]

    def array(self, value: Any, path: str) -> List[Any]:
        if not isinstance(value, list):
            self.problem(path, f"expected an array, got {_type_name(value)}")
            return []
        return value

    def model(self, document: Any) -> Optional[FeatureModel]:
        data = self.object(document, "", MODEL_KEYS)
        if data is None:
            return None
        if data["schema"] != SCHEMA_VERSION or isinstance(data["schema"], bool):
            self.problem("/schema", f"unsupported schema version: {data['schema']!r}")
        name = self.string(data["name"], "/name")

        features = []
        seen: Dict[str, int] = {}
        for index, item in enumerate(self.array(data["features"], "/features")):
            feature = self.feature(item, f"/features/{index}")
            if feature is None:
                continue
            if feature.name in seen:
                self.problem(
                    f"/features/{index}/name",
                    f"feature '{feature.name}' is declared more than once "
                    f"(first at /features/{seen[feature.name]})",
                    DiagnosticCode.DUPLICATE_FEATURE,
                )
            seen.setdefault(feature.name, index)
            features.append(feature)

        if self.diagnostics or name is None:
            return None
        return FeatureModel(name=name, features=tuple(features))

    def feature(self, value: Any, path: str) -> Optional[Feature]:
        data = self.object(value, path, FEATURE_KEYS)
        if data is None:
            return None
        before = len(self.diagnostics)
        name = self.string(data["name"], f"{path}/name")
        attributes = [
            self.attribute(item, f"{path}/attributes/{i}")
            for i, item in enumerate(self.array(data["attributes"], f"{path}/attributes"))
        ]
        decompositions = [
            self.decomposition(item, f"{path}/decompositions/{i}")
            for i, item in enumerate(
                self.array(data["decompositions"], f"{path}/decompositions")
            )
        ]
        constraints = [
            self.constraint(item, f"{path}/constraints/{i}")
            for i, item in enumerate(self.array(data["constraints"], f"{path}/constraints"))
        ]
        included_in = self.strings(data["included_in"], f"{path}/included_in")

        if len(self.diagnostics) > before or name is None or included_in is None:
            return None
        return Feature(
            name=name,
            attributes=tuple(attributes),  # type: ignore[arg-type]
            decompositions=tuple(decompositions),  # type: ignore[arg-type]
            constraints=tuple(constraints),  # type: ignore[arg-type]
            included_in=included_in,
        )

    def attribute(self, value: Any, path: str) -> Optional[Attribute]:
        data = self.object(value, path, ATTRIBUTE_KEYS)
        if data is None:
            return None
        key = self.string(data["key"], f"{path}/key")
        values = self.strings(data["values"], f"{path}/values", allow_empty=False)
        if key is None or values is None:
            return None
        return Attribute(key=key, values=values)

    def kind(self, value: Any, path: str, enum: Any) -> Optional[Any]:
        if not isinstance(value, dict) or "kind" not in value:
            return None
        try:
            return enum(value["kind"])
        except ValueError:
            choices = ", ".join(member.value for member in enum)
            self.problem(f"{path}/kind", f"unknown kind {value['kind']!r} (expected {choices})")
            return None

    def decomposition(self, value: Any, path: str) -> Optional[Decomposition]:
        kind = self.kind(value, path, DecompositionKind)
        if kind is None:
            if not isinstance(value, dict) or "kind" not in value:
                self.object(value, path, ("kind",))
            return None
        keys = DECOMPOSITION_KEYS["group" if kind.is_group else kind]
        data = self.object(value, path, keys)
        if data is None:
            return None
        if kind.is_group:
            children = self.strings(data["children"], f"{path}/children", allow_empty=False)
            return Decomposition.group(kind, children) if children else None
        if kind is DecompositionKind.SELECT:
            base = self.string(data["base"], f"{path}/base")
            variations = self.strings(data["variations"], f"{path}/variations", allow_empty=False)
            return Decomposition.select(base, variations) if base and variations else None
        target = self.string(data["target"], f"{path}/target")
        return Decomposition.default(target) if target else None

    def constraint(self, value: Any, path: str) -> Optional[Constraint]:
        kind = self.kind(value, path, ConstraintKind)
        if kind is None:
            if not isinstance(value, dict) or "kind" not in value:
                self.object(value, path, CONSTRAINT_KEYS)
            return None
        data = self.object(value, path, CONSTRAINT_KEYS)
        if data is None:
            return None
        target = self.string(data["target"], f"{path}/target")
        return Constraint(kind=kind, target=target) if target else None


def _type_name(value: Any) -> str:
    if value is None:
        return "null"
    return {
        bool: "boolean",
        int: "number",
        float: "number",
        str: "string",
        list: "array",
        dict: "object",
    }.get(type(value), type(value).__name__)


def _escape(key: str) -> str:
    return str(key).replace("~", "~0").replace("/", "~1")


def decode_json(text: str) -> Tuple[Optional[FeatureModel], List[Diagnostic]]:
    """Decode a document; returns (model, []) or (None, diagnostics)"""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        return None, [
            Diagnostic(
                Severity.ERROR,
                DiagnosticCode.SCHEMA,
                f"invalid JSON: {e.msg} (line {e.lineno}, column {e.colno})",
                path="/",
            )
        ]
    decoder = _Decoder()
    model = decoder.model(document)
    logger.debug(f"Decoded JSON model with {len(decoder.diagnostics)} diagnostic(s)")
    return model, decoder.diagnostics


def from_json(text: str) -> FeatureModel:
    """Inverse of `to_json`; raises SchemaError carrying every diagnostic"""
    model, diagnostics = decode_json(text)
    if diagnostics or model is None:
        raise SchemaError(diagnostics)
    return model
