"""Runtime class algebra: build new classes out of existing ones.

The model covers homogeneous classes (one specification, one signature)
and single-core heterogeneous classes (a shared core plus per-type
projections).  The exploiters (union, intersection, difference,
symmetric difference, cloning) are pure functions over these immutable
values; class files and descriptors make results persistent and
consumable by runtime materializers.
"""

from .errors import (
    DoesNotExist,
    DuplicateTypes,
    InvalidName,
    OodnError,
    ParseError,
    RegistryError,
    SchemaError,
    TooFewInputs,
    ValidationError,
)
from .exploiters import (
    ExploiterOutcome,
    ExploiterStats,
    Lineage,
    Strategy,
    assemble_heterogeneous,
    clone_class,
    difference,
    intersection,
    symmetric_difference,
    union,
)
from .model import (
    AnyClass,
    DataType,
    HeterogeneousClass,
    HomogeneousClass,
    Method,
    Metrics,
    Parameter,
    Projection,
    Property,
    Signature,
    Specification,
    Value,
    canonicalize,
    eq_method,
    eq_property,
    eq_type,
    flatten_type,
    is_identifier,
    metrics_of,
    subtype_of,
    types_of,
    validate,
    warnings_for,
)
from .storage import (
    FORMAT_VERSION,
    ClassFile,
    Descriptor,
    Registry,
    emit_descriptor,
    load,
    parse_class_file,
    read_class_file,
    save,
    serialize_class,
    serialize_descriptor,
)
from .cli import run_cli

__all__ = [
    "AnyClass",
    "ClassFile",
    "DataType",
    "Descriptor",
    "DoesNotExist",
    "DuplicateTypes",
    "ExploiterOutcome",
    "ExploiterStats",
    "FORMAT_VERSION",
    "HeterogeneousClass",
    "HomogeneousClass",
    "InvalidName",
    "Lineage",
    "Method",
    "Metrics",
    "OodnError",
    "Parameter",
    "ParseError",
    "Projection",
    "Property",
    "Registry",
    "RegistryError",
    "SchemaError",
    "Signature",
    "Specification",
    "Strategy",
    "TooFewInputs",
    "ValidationError",
    "Value",
    "assemble_heterogeneous",
    "canonicalize",
    "clone_class",
    "difference",
    "emit_descriptor",
    "eq_method",
    "eq_property",
    "eq_type",
    "flatten_type",
    "intersection",
    "is_identifier",
    "load",
    "metrics_of",
    "parse_class_file",
    "read_class_file",
    "run_cli",
    "save",
    "serialize_class",
    "serialize_descriptor",
    "subtype_of",
    "symmetric_difference",
    "types_of",
    "union",
    "validate",
    "warnings_for",
]
