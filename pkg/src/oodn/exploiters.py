"""Universal exploiters over classes: union, intersection, difference,
symmetric difference, cloning and heterogeneous assembly.

Every exploiter is a pure function: inputs are never modified, results
are freshly built values, and the comparison counters live in the
per-call :class:`ExploiterStats`, so calls are safe from any number of
concurrent tasks.

Two interchangeable strategies are provided.  The naive strategy scans
members pairwise with literal linear searches and counts every
equivalence test it performs; it is the reference implementation and
the one whose ``tuples_considered`` reproduces the product-form cost
D(t_1)x...xD(t_n) + func(t_1)x...xfunc(t_n) over the flattened input
types.  The keyed strategy buckets members by an equivalence key so
equal members meet by construction; it performs no element comparisons
and reports zero counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, Sequence

from .errors import (
    DoesNotExist,
    DuplicateTypes,
    InvalidName,
    TooFewInputs,
    ValidationError,
)
from .model import (
    AnyClass,
    HeterogeneousClass,
    HomogeneousClass,
    Method,
    Projection,
    Property,
    Signature,
    Specification,
    eq_method,
    eq_property,
    eq_type,
    is_identifier,
    method_key,
    property_key,
    types_of,
    validate,
    warnings_for,
)

__all__ = [
    "Strategy",
    "ExploiterStats",
    "Lineage",
    "ExploiterOutcome",
    "union",
    "intersection",
    "difference",
    "symmetric_difference",
    "clone_class",
    "assemble_heterogeneous",
]


class Strategy(str, Enum):
    """How an exploiter searches for equivalent members."""

    NAIVE = "naive"
    KEYED = "keyed"


@dataclass(frozen=True)
class ExploiterStats:
    """Per-call instrumentation of one exploiter invocation.

    ``property_comparisons`` and ``method_comparisons`` count the
    equivalence tests actually performed (zero under the keyed
    strategy).  ``tuples_considered`` is the product-form cost of the
    naive tuple scan over the flattened input types, reported only by
    the naive strategy.
    """

    property_comparisons: int = 0
    method_comparisons: int = 0
    tuples_considered: int = 0


@dataclass(frozen=True)
class Lineage:
    """Provenance of a result: operation name, input class names, and
    free-form notes (single-type collapse, empty core, empty
    projections)."""

    op: str
    inputs: tuple[str, ...]
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class ExploiterOutcome:
    """An exploiter result together with its stats and lineage."""

    result: AnyClass
    stats: ExploiterStats
    lineage: Lineage


class _Counter:
    """Mutable comparison tally threaded through the naive scans."""

    __slots__ = ("properties", "methods")

    def __init__(self) -> None:
        self.properties = 0
        self.methods = 0


# ---------------------------------------------------------------------------
# Input guards
# ---------------------------------------------------------------------------

def _require_valid(c: AnyClass, role: str) -> None:
    violations = validate(c)
    if violations:
        raise ValidationError(f"{role} {c.name!r} is not valid", tuple(violations))


def _resolve_name(result_name: str | None, default: str) -> str:
    if result_name is None:
        return default
    if not is_identifier(result_name):
        raise InvalidName(f"result name {result_name!r} is not a valid identifier")
    return result_name


# ---------------------------------------------------------------------------
# Naive scans (literal linear searches, every equivalence test counted)
# ---------------------------------------------------------------------------

def _prop_found(p: Property, pool: Iterable[Property], counter: _Counter) -> bool:
    for q in pool:
        counter.properties += 1
        if eq_property(p, q):
            return True
    return False


def _method_found(m: Method, pool: Iterable[Method], counter: _Counter) -> bool:
    for n in pool:
        counter.methods += 1
        if eq_method(m, n):
            return True
    return False


def _naive_common(
    types: Sequence[HomogeneousClass], counter: _Counter
) -> tuple[tuple[Property, ...], tuple[Method, ...]]:
    # Members are copied from the first type, in its order.
    first = types[0]
    props = tuple(
        p
        for p in first.spec
        if all(_prop_found(p, t.spec, counter) for t in types[1:])
    )
    methods = tuple(
        m
        for m in first.sig
        if all(_method_found(m, t.sig, counter) for t in types[1:])
    )
    return props, methods


def _naive_leftover(
    t: HomogeneousClass,
    core_props: Sequence[Property],
    core_methods: Sequence[Method],
    counter: _Counter,
) -> tuple[tuple[Property, ...], tuple[Method, ...]]:
    props = tuple(p for p in t.spec if not _prop_found(p, core_props, counter))
    methods = tuple(m for m in t.sig if not _method_found(m, core_methods, counter))
    return props, methods


def _naive_reduce(
    t: HomogeneousClass,
    removals: Sequence[HomogeneousClass],
    counter: _Counter,
) -> HomogeneousClass:
    props = tuple(
        p
        for p in t.spec
        if not any(_prop_found(p, v.spec, counter) for v in removals)
    )
    methods = tuple(
        m
        for m in t.sig
        if not any(_method_found(m, v.sig, counter) for v in removals)
    )
    return HomogeneousClass(t.name, Specification(props), Signature(methods))


# ---------------------------------------------------------------------------
# Keyed scans (equivalence-key buckets, no element comparisons)
# ---------------------------------------------------------------------------

def _keyed_common(
    types: Sequence[HomogeneousClass],
) -> tuple[tuple[Property, ...], tuple[Method, ...]]:
    prop_keys = {property_key(p) for p in types[0].spec}
    method_keys = {method_key(m) for m in types[0].sig}
    for t in types[1:]:
        prop_keys &= {property_key(p) for p in t.spec}
        method_keys &= {method_key(m) for m in t.sig}
    props = tuple(p for p in types[0].spec if property_key(p) in prop_keys)
    methods = tuple(m for m in types[0].sig if method_key(m) in method_keys)
    return props, methods


def _keyed_leftover(
    t: HomogeneousClass,
    core_props: Sequence[Property],
    core_methods: Sequence[Method],
) -> tuple[tuple[Property, ...], tuple[Method, ...]]:
    prop_keys = {property_key(p) for p in core_props}
    method_keys = {method_key(m) for m in core_methods}
    props = tuple(p for p in t.spec if property_key(p) not in prop_keys)
    methods = tuple(m for m in t.sig if method_key(m) not in method_keys)
    return props, methods


def _keyed_reduce(
    t: HomogeneousClass, removals: Sequence[HomogeneousClass]
) -> HomogeneousClass:
    prop_keys = {property_key(p) for v in removals for p in v.spec}
    method_keys = {method_key(m) for v in removals for m in v.sig}
    props = tuple(p for p in t.spec if property_key(p) not in prop_keys)
    methods = tuple(m for m in t.sig if method_key(m) not in method_keys)
    return HomogeneousClass(t.name, Specification(props), Signature(methods))


# ---------------------------------------------------------------------------
# Shared steps
# ---------------------------------------------------------------------------

def _dedup_types(types: Sequence[HomogeneousClass]) -> list[HomogeneousClass]:
    # First occurrence wins; equivalence tests here are structural
    # bookkeeping, not part of the instrumented member scans.
    out: list[HomogeneousClass] = []
    for t in types:
        if not any(eq_type(t, u) for u in out):
            out.append(t)
    return out


def _tuple_cost(types: Sequence[HomogeneousClass]) -> int:
    return math.prod(len(t.spec) for t in types) + math.prod(
        len(t.sig) for t in types
    )


def _pair_cost(
    left: Sequence[HomogeneousClass], right: Sequence[HomogeneousClass]
) -> int:
    return sum(
        len(u.spec) * len(v.spec) + len(u.sig) * len(v.sig)
        for u in left
        for v in right
    )


def _assemble(
    types: Sequence[HomogeneousClass],
    result_name: str,
    strategy: Strategy,
    counter: _Counter,
    notes: list[str],
) -> AnyClass:
    if len(types) == 1:
        only = types[0]
        notes.append(f"single type survived; collapsed to homogeneous {only.name!r}")
        return only

    if strategy is Strategy.NAIVE:
        core_props, core_methods = _naive_common(types, counter)
    else:
        core_props, core_methods = _keyed_common(types)

    used_names: set[str] = set()
    projections: list[Projection] = []
    for t in types:
        if strategy is Strategy.NAIVE:
            props, methods = _naive_leftover(t, core_props, core_methods, counter)
        else:
            props, methods = _keyed_leftover(t, core_props, core_methods)
        name = t.name
        suffix = 2
        while name in used_names:
            name = f"{t.name}_{suffix}"
            suffix += 1
        used_names.add(name)
        projections.append(Projection(name, Specification(props), Signature(methods)))

    result = HeterogeneousClass(
        name=result_name,
        core_spec=Specification(core_props),
        core_sig=Signature(core_methods),
        projections=tuple(projections),
    )
    notes.extend(warnings_for(result))
    return result


def _outcome(
    op: str,
    inputs: Sequence[AnyClass],
    result: AnyClass,
    strategy: Strategy,
    counter: _Counter,
    tuples: int,
    notes: list[str],
) -> ExploiterOutcome:
    stats = ExploiterStats(
        property_comparisons=counter.properties,
        method_comparisons=counter.methods,
        tuples_considered=tuples if strategy is Strategy.NAIVE else 0,
    )
    lineage = Lineage(
        op=op, inputs=tuple(c.name for c in inputs), notes=tuple(notes)
    )
    return ExploiterOutcome(result=result, stats=stats, lineage=lineage)


# ---------------------------------------------------------------------------
# Exploiters
# ---------------------------------------------------------------------------

def union(
    inputs: Sequence[AnyClass],
    strategy: Strategy = Strategy.KEYED,
    result_name: str | None = None,
) -> ExploiterOutcome:
    """Merge classes into one class defining every distinct input type.

    All input types are flattened, deduplicated under type equivalence
    (first occurrence wins), and reassembled: members common to every
    surviving type form the core, the rest form one projection per
    type.  A single surviving type collapses the result to that
    homogeneous class.
    """
    if len(inputs) < 2:
        raise TooFewInputs(f"union requires at least 2 classes, got {len(inputs)}")
    for c in inputs:
        _require_valid(c, "union input")
    name = _resolve_name(result_name, "Union")

    all_types = [t for c in inputs for t in types_of(c)]
    counter = _Counter()
    notes: list[str] = []
    survivors = _dedup_types(all_types)
    result = _assemble(survivors, name, strategy, counter, notes)
    return _outcome(
        "union", inputs, result, strategy, counter, _tuple_cost(all_types), notes
    )


def intersection(
    inputs: Sequence[AnyClass],
    strategy: Strategy = Strategy.KEYED,
    result_name: str | None = None,
) -> ExploiterOutcome:
    """Extract the homogeneous class of members common to every type.

    The result holds every property and method that has an equivalent
    counterpart in each flattened type of each input, so it is a
    subtype of all of them and maximal among such subtypes.  Existence
    follows the property quantifier: no common property means the
    intersection does not exist, even when methods overlap; any
    overlapping method names are reported in the error payload.
    """
    if len(inputs) < 2:
        raise TooFewInputs(
            f"intersection requires at least 2 classes, got {len(inputs)}"
        )
    for c in inputs:
        _require_valid(c, "intersection input")
    name = _resolve_name(result_name, "Intersection")

    all_types = [t for c in inputs for t in types_of(c)]
    counter = _Counter()
    if strategy is Strategy.NAIVE:
        props, methods = _naive_common(all_types, counter)
    else:
        props, methods = _keyed_common(all_types)

    if not props:
        details = tuple(m.name for m in methods)
        suffix = (
            f" (methods {', '.join(details)} overlap but cannot carry it)"
            if details
            else ""
        )
        raise DoesNotExist(
            "intersection does not exist: no property is common to all input"
            " types" + suffix,
            details,
        )

    result = HomogeneousClass(name, Specification(props), Signature(methods))
    return _outcome(
        "intersection",
        inputs,
        result,
        strategy,
        counter,
        _tuple_cost(all_types),
        [],
    )


def _reduced_types(
    minuend: AnyClass,
    removals: Sequence[HomogeneousClass],
    strategy: Strategy,
    counter: _Counter,
) -> list[HomogeneousClass]:
    out: list[HomogeneousClass] = []
    for t in types_of(minuend):
        if strategy is Strategy.NAIVE:
            reduced = _naive_reduce(t, removals, counter)
        else:
            reduced = _keyed_reduce(t, removals)
        if reduced.spec or reduced.sig:
            out.append(reduced)
    return out


def difference(
    minuend: AnyClass,
    subtrahends: Sequence[AnyClass],
    strategy: Strategy = Strategy.KEYED,
    result_name: str | None = None,
) -> ExploiterOutcome:
    """Remove from each minuend type every member equivalent to a member
    of any subtrahend type.

    Types left empty are dropped; survivors are deduplicated and
    reassembled (one survivor collapses to a homogeneous class).  The
    difference does not exist when nothing survives.
    """
    if len(subtrahends) < 1:
        raise TooFewInputs("difference requires at least 1 subtrahend, got 0")
    _require_valid(minuend, "difference minuend")
    for c in subtrahends:
        _require_valid(c, "difference subtrahend")
    name = _resolve_name(result_name, "Difference")

    removals = [t for c in subtrahends for t in types_of(c)]
    counter = _Counter()
    notes: list[str] = []
    survivors = _dedup_types(_reduced_types(minuend, removals, strategy, counter))
    if not survivors:
        raise DoesNotExist(
            "difference does not exist: every member of every minuend type has"
            " an equivalent member in a subtrahend"
        )
    result = _assemble(survivors, name, strategy, counter, notes)
    tuples = _pair_cost(types_of(minuend), removals)
    return _outcome(
        "difference", [minuend, *subtrahends], result, strategy, counter, tuples, notes
    )


def symmetric_difference(
    a: AnyClass,
    b: AnyClass,
    strategy: Strategy = Strategy.KEYED,
    result_name: str | None = None,
) -> ExploiterOutcome:
    """Keep what each side has that the other lacks.

    The surviving types of difference(a, [b]) and difference(b, [a])
    are concatenated, deduplicated and reassembled.  Structurally
    identical inputs leave nothing on either side, so the symmetric
    difference does not exist.
    """
    _require_valid(a, "symmetric difference input")
    _require_valid(b, "symmetric difference input")
    name = _resolve_name(result_name, "SymmetricDifference")

    counter = _Counter()
    notes: list[str] = []
    left = _reduced_types(a, types_of(b), strategy, counter)
    right = _reduced_types(b, types_of(a), strategy, counter)
    survivors = _dedup_types(left + right)
    if not survivors:
        raise DoesNotExist(
            "symmetric difference does not exist: the classes define"
            " structurally identical types"
        )
    result = _assemble(survivors, name, strategy, counter, notes)
    tuples = _pair_cost(types_of(a), types_of(b)) + _pair_cost(
        types_of(b), types_of(a)
    )
    return _outcome(
        "symmetric_difference", [a, b], result, strategy, counter, tuples, notes
    )


def clone_class(c: AnyClass, new_name: str) -> AnyClass:
    """Copy a class under a new name.

    Members are immutable values, so structural sharing is safe; the
    clone is indistinguishable from a deep copy and the original is
    untouched.
    """
    _require_valid(c, "clone input")
    if not is_identifier(new_name):
        raise InvalidName(f"clone name {new_name!r} is not a valid identifier")
    return replace(c, name=new_name)


def assemble_heterogeneous(
    types: Sequence[HomogeneousClass],
    result_name: str | None = None,
) -> AnyClass:
    """Factor pairwise non-equivalent types through their shared core.

    A single type is returned as-is; two equivalent inputs are
    rejected.  Each projection, flattened back onto the core, is
    equivalent to the type it came from.
    """
    if len(types) < 1:
        raise TooFewInputs("assembly requires at least 1 type, got 0")
    for t in types:
        _require_valid(t, "assembly input")
    for i, t in enumerate(types):
        for u in types[i + 1 :]:
            if eq_type(t, u):
                raise DuplicateTypes(
                    f"types {t.name!r} and {u.name!r} are equivalent"
                )
    name = _resolve_name(result_name, "Assembly")
    return _assemble(list(types), name, Strategy.KEYED, _Counter(), [])
