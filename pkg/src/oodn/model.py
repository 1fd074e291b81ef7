"""Value model for homogeneous and single-core heterogeneous classes.

A homogeneous class pairs a specification (an ordered vector of
properties) with a signature (an ordered vector of methods) and
describes objects of a single structure.  A single-core heterogeneous
class factors several related structures through a shared core: the
core holds the members common to every type the class defines, and each
projection holds the members unique to one type.  Flattening the core
with one projection recovers the homogeneous type it defines.

Everything in this module is an immutable value.  Operations are pure
functions returning new objects; nothing ever mutates an existing
class, so values can be shared freely between concurrent tasks.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator, Sequence, TypeVar, Union

__all__ = [
    "DataType",
    "Scalar",
    "Value",
    "Property",
    "Parameter",
    "Method",
    "Specification",
    "Signature",
    "HomogeneousClass",
    "Projection",
    "HeterogeneousClass",
    "AnyClass",
    "Metrics",
    "is_identifier",
    "literal_conforms",
    "eq_property",
    "eq_method",
    "eq_type",
    "subtype_of",
    "flatten_type",
    "types_of",
    "metrics_of",
    "validate",
    "warnings_for",
    "canonicalize",
    "property_key",
    "method_key",
]

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def is_identifier(name: str) -> bool:
    """True when ``name`` matches ``[A-Za-z_][A-Za-z0-9_]*``."""
    return isinstance(name, str) and bool(_IDENTIFIER.match(name))


class DataType(str, Enum):
    """Scalar datatype of a property, parameter or return value."""

    INTEGER = "integer"
    REAL = "real"
    TEXT = "text"
    BOOLEAN = "boolean"


Scalar = Union[int, float, str, bool]


def literal_conforms(datatype: DataType, literal: Scalar) -> bool:
    """True when ``literal`` is a value of ``datatype``.

    bool is tested before int because Python bools are ints; real
    literals must be finite so that equivalence stays reflexive.
    """
    if datatype is DataType.BOOLEAN:
        return isinstance(literal, bool)
    if datatype is DataType.INTEGER:
        return isinstance(literal, int) and not isinstance(literal, bool)
    if datatype is DataType.REAL:
        return isinstance(literal, float) and math.isfinite(literal)
    return isinstance(literal, str)


@dataclass(frozen=True)
class Value:
    """A concrete literal tagged with its datatype."""

    datatype: DataType
    literal: Scalar


@dataclass(frozen=True)
class Property:
    """A named, typed, optionally valued attribute of a class."""

    name: str
    datatype: DataType
    value: Value | None = None


@dataclass(frozen=True)
class Parameter:
    """A named, typed method parameter."""

    name: str
    datatype: DataType


@dataclass(frozen=True)
class Method:
    """A named callable signature with an opaque body reference.

    The body is never interpreted; ``body_ref`` is carried along as an
    opaque token and ignored by every comparison.
    """

    name: str
    params: tuple[Parameter, ...] = ()
    returns: DataType | None = None
    body_ref: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", tuple(self.params))


@dataclass(frozen=True)
class Specification:
    """The ordered property vector of a class or projection."""

    properties: tuple[Property, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "properties", tuple(self.properties))

    def __iter__(self) -> Iterator[Property]:
        return iter(self.properties)

    def __len__(self) -> int:
        return len(self.properties)

    def __bool__(self) -> bool:
        return bool(self.properties)


@dataclass(frozen=True)
class Signature:
    """The ordered method vector of a class or projection."""

    methods: tuple[Method, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "methods", tuple(self.methods))

    def __iter__(self) -> Iterator[Method]:
        return iter(self.methods)

    def __len__(self) -> int:
        return len(self.methods)

    def __bool__(self) -> bool:
        return bool(self.methods)


@dataclass(frozen=True)
class HomogeneousClass:
    """A named specification + signature pair defining one type."""

    name: str
    spec: Specification = Specification()
    sig: Signature = Signature()


@dataclass(frozen=True)
class Projection:
    """The members unique to one type of a heterogeneous class."""

    type_name: str
    spec: Specification = Specification()
    sig: Signature = Signature()


@dataclass(frozen=True)
class HeterogeneousClass:
    """A single-core heterogeneous class: shared core plus projections.

    Each projection, flattened onto the core, defines one homogeneous
    type.  The core may be empty (structurally disjoint types); a
    projection may also be empty, in which case its type coincides with
    the core.  Both conditions are reported by :func:`warnings_for`.
    """

    name: str
    core_spec: Specification = Specification()
    core_sig: Signature = Signature()
    projections: tuple[Projection, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "projections", tuple(self.projections))


AnyClass = Union[HomogeneousClass, HeterogeneousClass]


@dataclass(frozen=True)
class Metrics:
    """Member counts of one type: property count and method count."""

    dimension: int
    functionality: int


# ---------------------------------------------------------------------------
# Equivalence predicates
# ---------------------------------------------------------------------------

def eq_property(a: Property, b: Property) -> bool:
    """Structural property equivalence.

    Names and datatypes must match, and the values must either both be
    absent or both be present with equal literals.  Valued and
    value-less properties of the same name are therefore distinct, as
    are same-named properties carrying different literals.
    """
    return a.name == b.name and a.datatype == b.datatype and a.value == b.value


def eq_method(a: Method, b: Method) -> bool:
    """Signature-level method equivalence.

    Names, positional parameter datatypes and return types must match.
    Parameter names and body references are ignored: the engine
    compares structure, never behaviour.
    """
    if a.name != b.name or a.returns != b.returns:
        return False
    if len(a.params) != len(b.params):
        return False
    return all(p.datatype == q.datatype for p, q in zip(a.params, b.params))


_T = TypeVar("_T")


def _multiset_match(
    xs: Sequence[_T], ys: Sequence[_T], eq: Callable[[_T, _T], bool]
) -> bool:
    # Greedy matching is exact here because eq is an equivalence
    # relation: its classes partition both sides, so a bijection exists
    # iff per-class counts agree.
    if len(xs) != len(ys):
        return False
    used = [False] * len(ys)
    for x in xs:
        for j, y in enumerate(ys):
            if not used[j] and eq(x, y):
                used[j] = True
                break
        else:
            return False
    return True


def eq_type(a: HomogeneousClass, b: HomogeneousClass) -> bool:
    """Type equivalence: member multisets match one-to-one.

    Order-insensitive on both properties and methods; class names never
    participate.
    """
    return _multiset_match(
        a.spec.properties, b.spec.properties, eq_property
    ) and _multiset_match(a.sig.methods, b.sig.methods, eq_method)


def subtype_of(a: HomogeneousClass, b: HomogeneousClass) -> bool:
    """True when every member of ``a`` has an equivalent member in ``b``."""
    return all(
        any(eq_property(p, q) for q in b.spec) for p in a.spec
    ) and all(any(eq_method(m, n) for n in b.sig) for m in a.sig)


# ---------------------------------------------------------------------------
# Type extraction and metrics
# ---------------------------------------------------------------------------

def flatten_type(t: HeterogeneousClass, index: int) -> HomogeneousClass:
    """Extract the homogeneous type defined by the ``index``-th projection.

    ``index`` is 1-based.  The result is named after the projection and
    concatenates the core members with the projection members, core
    first.  Raises :class:`IndexError` when the index is out of range.
    """
    if not 1 <= index <= len(t.projections):
        raise IndexError(
            f"projection index {index} out of range 1..{len(t.projections)}"
            f" for class {t.name!r}"
        )
    proj = t.projections[index - 1]
    return HomogeneousClass(
        name=proj.type_name,
        spec=Specification(t.core_spec.properties + proj.spec.properties),
        sig=Signature(t.core_sig.methods + proj.sig.methods),
    )


def types_of(c: AnyClass) -> list[HomogeneousClass]:
    """Enumerate the homogeneous types a class defines, in order."""
    if isinstance(c, HomogeneousClass):
        return [c]
    return [flatten_type(c, i) for i in range(1, len(c.projections) + 1)]


def metrics_of(t: HomogeneousClass) -> Metrics:
    """Property and method counts of one homogeneous type."""
    return Metrics(dimension=len(t.spec), functionality=len(t.sig))


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def _check_members(spec: Specification, sig: Signature, where: str, out: list[str]) -> None:
    seen_names: set[str] = set()
    for p in spec:
        if not is_identifier(p.name):
            out.append(f"property name {p.name!r} is not a valid identifier (in {where})")
        if p.name in seen_names:
            out.append(f"duplicate property name {p.name!r} (in {where})")
        seen_names.add(p.name)
        if p.value is not None:
            if p.value.datatype != p.datatype:
                out.append(
                    f"property {p.name!r} value is tagged {p.value.datatype.value}"
                    f" but the property is {p.datatype.value} (in {where})"
                )
            elif not literal_conforms(p.value.datatype, p.value.literal):
                out.append(
                    f"property {p.name!r} value {p.value.literal!r} does not conform"
                    f" to {p.value.datatype.value} (in {where})"
                )
    for i, m in enumerate(sig):
        if not is_identifier(m.name):
            out.append(f"method name {m.name!r} is not a valid identifier (in {where})")
        param_names = [q.name for q in m.params]
        for q in m.params:
            if not is_identifier(q.name):
                out.append(
                    f"method {m.name!r} parameter name {q.name!r} is not a valid"
                    f" identifier (in {where})"
                )
        if len(set(param_names)) != len(param_names):
            out.append(f"method {m.name!r} has duplicate parameter names (in {where})")
        for n in sig.methods[:i]:
            if eq_method(m, n):
                out.append(f"equivalent method {m.name!r} appears twice (in {where})")
                break


def validate(c: AnyClass) -> list[str]:
    """Check every invariant of a class; return one entry per violation.

    Violations are data, not failures: the list is empty exactly when
    the class is well-formed.  Conditions that are legal but noteworthy
    (an empty core, an empty projection) are reported separately by
    :func:`warnings_for`.
    """
    out: list[str] = []
    if isinstance(c, HomogeneousClass):
        if not is_identifier(c.name):
            out.append(f"class name {c.name!r} is not a valid identifier")
        _check_members(c.spec, c.sig, f"class {c.name!r}", out)
        if not c.spec and not c.sig:
            out.append(f"class {c.name!r} has neither properties nor methods")
        return out

    if not is_identifier(c.name):
        out.append(f"class name {c.name!r} is not a valid identifier")
    _check_members(c.core_spec, c.core_sig, f"core of {c.name!r}", out)

    if len(c.projections) < 2:
        out.append(
            f"heterogeneous class {c.name!r} has {len(c.projections)} projection(s),"
            f" at least 2 are required"
        )

    seen_type_names: set[str] = set()
    for proj in c.projections:
        where = f"projection {proj.type_name!r} of {c.name!r}"
        if not is_identifier(proj.type_name):
            out.append(f"projection type name {proj.type_name!r} is not a valid identifier")
        if proj.type_name in seen_type_names:
            out.append(f"duplicate projection type name {proj.type_name!r} in {c.name!r}")
        seen_type_names.add(proj.type_name)
        _check_members(proj.spec, proj.sig, where, out)

        if not proj.spec and not proj.sig and not c.core_spec and not c.core_sig:
            out.append(
                f"projection {proj.type_name!r} of {c.name!r} defines an empty type"
                f" (both the core and the projection are empty)"
            )

        core_prop_names = {p.name for p in c.core_spec}
        for p in proj.spec:
            if any(eq_property(p, q) for q in c.core_spec):
                out.append(
                    f"projection {proj.type_name!r} property {p.name!r} is equivalent"
                    f" to a core property of {c.name!r}"
                )
            elif p.name in core_prop_names:
                out.append(
                    f"projection {proj.type_name!r} property {p.name!r} collides with"
                    f" a core property name of {c.name!r}"
                )
        for m in proj.sig:
            if any(eq_method(m, n) for n in c.core_sig):
                out.append(
                    f"projection {proj.type_name!r} method {m.name!r} is equivalent"
                    f" to a core method of {c.name!r}"
                )

    flat = [
        (proj.type_name, flatten_type(c, i))
        for i, proj in enumerate(c.projections, start=1)
    ]
    for i, (name_i, t_i) in enumerate(flat):
        for name_j, t_j in flat[i + 1 :]:
            if eq_type(t_i, t_j):
                out.append(
                    f"types {name_i!r} and {name_j!r} of {c.name!r} are equivalent"
                )
    return out


def warnings_for(c: AnyClass) -> list[str]:
    """Legal but noteworthy conditions of a class, one entry each."""
    if isinstance(c, HomogeneousClass):
        return []
    out: list[str] = []
    if not c.core_spec and not c.core_sig:
        out.append(f"core of {c.name!r} is empty (types share no members)")
    for proj in c.projections:
        if not proj.spec and not proj.sig:
            out.append(
                f"projection {proj.type_name!r} of {c.name!r} is empty"
                f" (its type coincides with the core)"
            )
    return out


# ---------------------------------------------------------------------------
# Canonical ordering
# ---------------------------------------------------------------------------

def _method_sort_key(m: Method) -> tuple:
    return (
        m.name,
        tuple(p.datatype.value for p in m.params),
        m.returns.value if m.returns is not None else "",
        tuple(p.name for p in m.params),
        m.body_ref or "",
    )


def _canon_spec(spec: Specification) -> Specification:
    return Specification(tuple(sorted(spec.properties, key=lambda p: p.name)))


def _canon_sig(sig: Signature) -> Signature:
    return Signature(tuple(sorted(sig.methods, key=_method_sort_key)))


def canonicalize(c: AnyClass) -> AnyClass:
    """Deterministic ordering: properties by name, methods by signature,
    projections by type name.  Idempotent, and equivalence-preserving
    for every flattened type.
    """
    if isinstance(c, HomogeneousClass):
        return HomogeneousClass(c.name, _canon_spec(c.spec), _canon_sig(c.sig))
    projections = tuple(
        Projection(p.type_name, _canon_spec(p.spec), _canon_sig(p.sig))
        for p in sorted(c.projections, key=lambda p: p.type_name)
    )
    return HeterogeneousClass(
        c.name, _canon_spec(c.core_spec), _canon_sig(c.core_sig), projections
    )


# ---------------------------------------------------------------------------
# Equivalence keys (hash-bucket form of the predicates above)
# ---------------------------------------------------------------------------

def property_key(p: Property) -> tuple:
    """Hashable key with ``key(a) == key(b)`` iff ``eq_property(a, b)``."""
    value = None if p.value is None else (p.value.datatype.value, p.value.literal)
    return (p.name, p.datatype.value, value)


def method_key(m: Method) -> tuple:
    """Hashable key with ``key(a) == key(b)`` iff ``eq_method(a, b)``."""
    return (
        m.name,
        tuple(p.datatype.value for p in m.params),
        m.returns.value if m.returns is not None else None,
    )
