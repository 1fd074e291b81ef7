"""Class files, descriptors and the directory-backed registry.

A class file is UTF-8 JSON with a fixed key order and canonically
sorted arrays, so saving the same class twice yields byte-identical
files and every exploiter result can be golden-tested.  A descriptor is
a strict superset of a class file: the same payload plus a lineage
record and an emission timestamp, consumed by runtime materializers.

Writes go to a temporary file in the target directory followed by an
atomic rename, so a concurrent reader never observes a torn file.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

from .errors import ParseError, RegistryError, SchemaError, ValidationError
from .exploiters import Lineage
from .model import (
    AnyClass,
    DataType,
    HeterogeneousClass,
    HomogeneousClass,
    Method,
    Parameter,
    Projection,
    Property,
    Signature,
    Specification,
    Value,
    canonicalize,
    validate,
)

__all__ = [
    "FORMAT_VERSION",
    "ClassFile",
    "Descriptor",
    "serialize_class",
    "serialize_descriptor",
    "parse_class_file",
    "read_class_file",
    "load",
    "save",
    "emit_descriptor",
    "Registry",
]

FORMAT_VERSION = "oodn-class/1"


@dataclass(frozen=True)
class ClassFile:
    """The on-disk unit: one format-tagged class payload."""

    payload: AnyClass
    format_version: str = FORMAT_VERSION


@dataclass(frozen=True)
class Descriptor:
    """A class file plus provenance, emitted for materializers."""

    payload: AnyClass
    lineage: Lineage
    emitted_at: str
    format_version: str = FORMAT_VERSION


# ---------------------------------------------------------------------------
# Serialization (canonical key order, canonical array order)
# ---------------------------------------------------------------------------

def _property_obj(p: Property) -> dict[str, Any]:
    return {
        "name": p.name,
        "datatype": p.datatype.value,
        "value": None if p.value is None else p.value.literal,
    }


def _method_obj(m: Method) -> dict[str, Any]:
    return {
        "name": m.name,
        "params": [{"name": q.name, "datatype": q.datatype.value} for q in m.params],
        "returns": None if m.returns is None else m.returns.value,
        "body_ref": m.body_ref,
    }


def _members_obj(spec: Specification, sig: Signature) -> dict[str, Any]:
    return {
        "specification": [_property_obj(p) for p in spec],
        "signature": [_method_obj(m) for m in sig],
    }


def _class_obj(c: AnyClass) -> dict[str, Any]:
    c = canonicalize(c)
    if isinstance(c, HomogeneousClass):
        out: dict[str, Any] = {
            "format": FORMAT_VERSION,
            "kind": "homogeneous",
            "name": c.name,
        }
        out.update(_members_obj(c.spec, c.sig))
        return out
    return {
        "format": FORMAT_VERSION,
        "kind": "heterogeneous",
        "name": c.name,
        "core": _members_obj(c.core_spec, c.core_sig),
        "projections": [
            {"type_name": p.type_name, **_members_obj(p.spec, p.sig)}
            for p in c.projections
        ],
    }


def _dump(obj: dict[str, Any]) -> bytes:
    return (json.dumps(obj, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def serialize_class(c: AnyClass) -> bytes:
    """Canonical class-file bytes: stable under repeated serialization."""
    return _dump(_class_obj(c))


def serialize_descriptor(d: Descriptor) -> bytes:
    """Canonical descriptor bytes: class file plus lineage and timestamp."""
    obj = _class_obj(d.payload)
    obj["lineage"] = {"op": d.lineage.op, "inputs": list(d.lineage.inputs)}
    obj["emitted_at"] = d.emitted_at
    return _dump(obj)


# ---------------------------------------------------------------------------
# Parsing (schema errors carry a path into the document)
# ---------------------------------------------------------------------------

def _expect_obj(x: Any, path: str) -> dict[str, Any]:
    if not isinstance(x, dict):
        raise SchemaError(f"{path}: expected an object, got {type(x).__name__}")
    return x


def _expect_list(x: Any, path: str) -> list[Any]:
    if not isinstance(x, list):
        raise SchemaError(f"{path}: expected an array, got {type(x).__name__}")
    return x


def _expect_str(x: Any, path: str) -> str:
    if not isinstance(x, str):
        raise SchemaError(f"{path}: expected a string, got {type(x).__name__}")
    return x


def _require(obj: dict[str, Any], key: str, path: str) -> Any:
    if key not in obj:
        raise SchemaError(f"{path}: missing required key {key!r}")
    return obj[key]


def _reject_unknown(obj: dict[str, Any], allowed: set[str], path: str) -> None:
    for key in obj:
        if key not in allowed:
            raise SchemaError(f"{path}: unknown key {key!r}")


def _parse_datatype(x: Any, path: str) -> DataType:
    text = _expect_str(x, path)
    try:
        return DataType(text)
    except ValueError:
        allowed = ", ".join(d.value for d in DataType)
        raise SchemaError(f"{path}: unknown datatype {text!r} (expected {allowed})")


def _parse_property(x: Any, path: str) -> Property:
    obj = _expect_obj(x, path)
    _reject_unknown(obj, {"name", "datatype", "value"}, path)
    name = _expect_str(_require(obj, "name", path), f"{path}.name")
    datatype = _parse_datatype(_require(obj, "datatype", path), f"{path}.datatype")
    literal = obj.get("value")
    if literal is None:
        return Property(name, datatype)
    if not isinstance(literal, (str, bool, int, float)):
        raise SchemaError(
            f"{path}.value: expected a scalar, got {type(literal).__name__}"
        )
    if (
        datatype is DataType.REAL
        and isinstance(literal, int)
        and not isinstance(literal, bool)
    ):
        literal = float(literal)
    return Property(name, datatype, Value(datatype, literal))


def _parse_param(x: Any, path: str) -> Parameter:
    obj = _expect_obj(x, path)
    _reject_unknown(obj, {"name", "datatype"}, path)
    name = _expect_str(_require(obj, "name", path), f"{path}.name")
    datatype = _parse_datatype(_require(obj, "datatype", path), f"{path}.datatype")
    return Parameter(name, datatype)


def _parse_method(x: Any, path: str) -> Method:
    obj = _expect_obj(x, path)
    _reject_unknown(obj, {"name", "params", "returns", "body_ref"}, path)
    name = _expect_str(_require(obj, "name", path), f"{path}.name")
    params = tuple(
        _parse_param(q, f"{path}.params[{i}]")
        for i, q in enumerate(_expect_list(obj.get("params", []), f"{path}.params"))
    )
    returns = obj.get("returns")
    if returns is not None:
        returns = _parse_datatype(returns, f"{path}.returns")
    body_ref = obj.get("body_ref")
    if body_ref is not None:
        body_ref = _expect_str(body_ref, f"{path}.body_ref")
    return Method(name, params, returns, body_ref)


def _parse_members(
    obj: dict[str, Any], path: str
) -> tuple[Specification, Signature]:
    spec = Specification(
        tuple(
            _parse_property(p, f"{path}.specification[{i}]")
            for i, p in enumerate(
                _expect_list(
                    _require(obj, "specification", path), f"{path}.specification"
                )
            )
        )
    )
    sig = Signature(
        tuple(
            _parse_method(m, f"{path}.signature[{i}]")
            for i, m in enumerate(
                _expect_list(_require(obj, "signature", path), f"{path}.signature")
            )
        )
    )
    return spec, sig


def parse_class_file(data: bytes | str, source: str = "<memory>") -> AnyClass:
    """Parse class-file text into a class without validating invariants.

    Raises :class:`ParseError` for malformed text and
    :class:`SchemaError` for wrong shape, unknown datatypes or a format
    version gate failure.  Top-level keys beyond the schema (a
    descriptor's lineage and timestamp) are ignored, so descriptors
    parse with the same function.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"{source}: not UTF-8 text ({e})") from e

    def _no_constants(token: str) -> Any:
        raise ParseError(f"{source}: non-finite number {token} is not allowed")

    try:
        doc = json.loads(data, parse_constant=_no_constants)
    except json.JSONDecodeError as e:
        raise ParseError(f"{source}:{e.lineno}:{e.colno}: {e.msg}") from e

    top = _expect_obj(doc, source)
    fmt = _expect_str(_require(top, "format", source), f"{source}.format")
    if fmt != FORMAT_VERSION:
        raise SchemaError(
            f"{source}.format: expected {FORMAT_VERSION!r}, got {fmt!r}"
        )
    kind = _expect_str(_require(top, "kind", source), f"{source}.kind")
    name = _expect_str(_require(top, "name", source), f"{source}.name")

    if kind == "homogeneous":
        spec, sig = _parse_members(top, source)
        return HomogeneousClass(name, spec, sig)
    if kind == "heterogeneous":
        core = _expect_obj(_require(top, "core", source), f"{source}.core")
        _reject_unknown(core, {"specification", "signature"}, f"{source}.core")
        core_spec, core_sig = _parse_members(core, f"{source}.core")
        projections = []
        for i, p in enumerate(
            _expect_list(_require(top, "projections", source), f"{source}.projections")
        ):
            ppath = f"{source}.projections[{i}]"
            pobj = _expect_obj(p, ppath)
            _reject_unknown(
                pobj, {"type_name", "specification", "signature"}, ppath
            )
            type_name = _expect_str(
                _require(pobj, "type_name", ppath), f"{ppath}.type_name"
            )
            pspec, psig = _parse_members(pobj, ppath)
            projections.append(Projection(type_name, pspec, psig))
        return HeterogeneousClass(name, core_spec, core_sig, tuple(projections))
    raise SchemaError(
        f"{source}.kind: expected 'homogeneous' or 'heterogeneous', got {kind!r}"
    )


def read_class_file(path: str | Path) -> AnyClass:
    """Read and parse one file, without validating invariants."""
    path = Path(path)
    return parse_class_file(path.read_bytes(), source=str(path))


def load(path: str | Path) -> AnyClass:
    """Read, parse and validate one class file.

    Raises :class:`ValidationError` listing every violated invariant;
    parse and schema errors as in :func:`parse_class_file`.
    """
    path = Path(path)
    c = read_class_file(path)
    violations = validate(c)
    if violations:
        raise ValidationError(f"{path}: class {c.name!r} is not valid", tuple(violations))
    return c


# ---------------------------------------------------------------------------
# Writing
# ---------------------------------------------------------------------------

def _atomic_write(path: Path, data: bytes) -> None:
    fd, tmp = tempfile.mkstemp(dir=str(path.parent) or ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as f:
            f.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def save(c: AnyClass, path: str | Path) -> None:
    """Write the canonical class file; atomic and byte-deterministic."""
    violations = validate(c)
    if violations:
        raise ValidationError(
            f"refusing to save invalid class {c.name!r}", tuple(violations)
        )
    _atomic_write(Path(path), serialize_class(c))


def _now_rfc3339() -> str:
    return (
        datetime.now(timezone.utc)
        .isoformat(timespec="seconds")
        .replace("+00:00", "Z")
    )


def emit_descriptor(
    c: AnyClass,
    lineage: Lineage,
    path: str | Path,
    emitted_at: str | None = None,
) -> Descriptor:
    """Write a descriptor for ``c``: canonical payload, lineage, timestamp.

    ``emitted_at`` defaults to the current UTC time; passing a fixed
    timestamp makes the output reproducible.
    """
    violations = validate(c)
    if violations:
        raise ValidationError(
            f"refusing to emit invalid class {c.name!r}", tuple(violations)
        )
    d = Descriptor(
        payload=canonicalize(c),
        lineage=lineage,
        emitted_at=emitted_at if emitted_at is not None else _now_rfc3339(),
    )
    _atomic_write(Path(path), serialize_descriptor(d))
    return d


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

@dataclass
class Registry:
    """A directory of class files indexed by class name.

    Class names are unique across the directory; every indexed file
    must parse and validate.  The index is rebuilt by :meth:`refresh`
    and kept current by :meth:`add`.
    """

    directory: Path
    _paths: dict[str, Path] = field(default_factory=dict, repr=False)
    _classes: dict[str, AnyClass] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self.directory = Path(self.directory)
        self.refresh()

    def refresh(self) -> None:
        paths: dict[str, Path] = {}
        classes: dict[str, AnyClass] = {}
        for path in sorted(self.directory.glob("*.cls")):
            try:
                c = load(path)
            except (ParseError, SchemaError, ValidationError) as e:
                raise RegistryError(f"registry file {path} is unusable: {e}") from e
            if c.name in paths:
                raise RegistryError(
                    f"class name {c.name!r} appears in both {paths[c.name].name}"
                    f" and {path.name}"
                )
            paths[c.name] = path
            classes[c.name] = c
        self._paths = paths
        self._classes = classes

    def names(self) -> list[str]:
        return sorted(self._classes)

    def get(self, name: str) -> AnyClass:
        if name not in self._classes:
            raise RegistryError(f"no class named {name!r} in {self.directory}")
        return self._classes[name]

    def path_of(self, name: str) -> Path:
        if name not in self._paths:
            raise RegistryError(f"no class named {name!r} in {self.directory}")
        return self._paths[name]

    def add(self, c: AnyClass) -> Path:
        if c.name in self._classes:
            raise RegistryError(
                f"class name {c.name!r} is already registered"
                f" ({self._paths[c.name].name})"
            )
        path = self.directory / f"{c.name}.cls"
        save(c, path)
        self._paths[c.name] = path
        self._classes[c.name] = canonicalize(c)
        return path
