"""Unit tests for the class model: equivalence, flattening, metrics,
validation and canonical ordering."""

from __future__ import annotations

import itertools
import random

import pytest

from oodn import (
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
from oodn.model import literal_conforms, method_key, property_key

from conftest import homog, method, prop
from randgen import random_homogeneous

INT = DataType.INTEGER
REAL = DataType.REAL
TEXT = DataType.TEXT
BOOL = DataType.BOOLEAN


class TestIdentifiers:
    def test_accepts_plain_names(self):
        for name in ("Car", "wheels", "_hidden", "a1", "A_B_2"):
            assert is_identifier(name)

    def test_rejects_bad_names(self):
        for name in ("", "1a", "a-b", "a b", "naïve", "a.b"):
            assert not is_identifier(name)


class TestLiteralConforms:
    def test_bool_is_not_integer(self):
        assert literal_conforms(BOOL, True)
        assert not literal_conforms(INT, True)
        assert not literal_conforms(BOOL, 1)

    def test_real_requires_finite_float(self):
        assert literal_conforms(REAL, 2.5)
        assert not literal_conforms(REAL, 4)
        assert not literal_conforms(REAL, float("inf"))
        assert not literal_conforms(REAL, float("nan"))

    def test_text(self):
        assert literal_conforms(TEXT, "red")
        assert not literal_conforms(TEXT, 7)


class TestEqProperty:
    def test_equal_when_name_type_value_match(self):
        assert eq_property(prop("wheels", INT, 4), prop("wheels", INT, 4))

    def test_value_presence_matters(self):
        assert not eq_property(prop("wheels", INT, 4), prop("wheels", INT))
        assert not eq_property(prop("wheels", INT), prop("wheels", INT, 4))

    def test_value_literal_matters(self):
        assert not eq_property(prop("wheels", INT, 4), prop("wheels", INT, 2))

    def test_name_and_datatype_matter(self):
        assert not eq_property(prop("wheels", INT), prop("doors", INT))
        assert not eq_property(prop("size", INT), prop("size", REAL))


class TestEqMethod:
    def test_param_names_and_body_ref_ignored(self):
        a = Method("drive", (Parameter("speed", INT),), BOOL, "x#1")
        b = Method("drive", (Parameter("velocity", INT),), BOOL, "y#9")
        assert eq_method(a, b)

    def test_param_types_positionwise(self):
        a = method("f", INT, REAL)
        b = method("f", REAL, INT)
        assert not eq_method(a, b)

    def test_arity_matters(self):
        assert not eq_method(method("f", INT), method("f"))

    def test_returns_matter(self):
        assert not eq_method(method("f", returns=INT), method("f", returns=REAL))
        assert not eq_method(method("f", returns=INT), method("f"))

    def test_name_matters(self):
        assert not eq_method(method("f"), method("g"))


class TestEqType:
    def test_order_insensitive(self):
        a = homog("A", [prop("x", INT), prop("y", TEXT)], [method("f"), method("g")])
        b = homog("B", [prop("y", TEXT), prop("x", INT)], [method("g"), method("f")])
        assert eq_type(a, b)

    def test_name_insensitive(self):
        a = homog("A", [prop("x", INT)])
        b = homog("Other", [prop("x", INT)])
        assert eq_type(a, b)

    def test_member_count_matters(self):
        a = homog("A", [prop("x", INT)])
        b = homog("B", [prop("x", INT), prop("y", INT)])
        assert not eq_type(a, b)

    def test_matches_brute_force_permutation_oracle(self):
        # A bijection over members exists iff some permutation aligns
        # them position by position; check the greedy matcher against
        # that definition on shuffled copies, near-miss mutations and
        # independent pairs.
        rng = random.Random(20260817)
        positives = 0
        negatives = 0
        for _ in range(300):
            a = random_homogeneous(rng, "A", max_props=3, max_methods=2)
            roll = rng.random()
            if roll < 0.4:
                props = list(a.spec.properties)
                methods = list(a.sig.methods)
                rng.shuffle(props)
                rng.shuffle(methods)
                b = homog("B", props, methods)
            elif roll < 0.7 and len(a.spec) > 1:
                b = homog("B", a.spec.properties[1:], a.sig.methods)
            else:
                b = random_homogeneous(rng, "B", max_props=3, max_methods=2)
            expected = _brute_force_eq_type(a, b)
            assert eq_type(a, b) == expected
            if expected:
                positives += 1
            else:
                negatives += 1
        assert positives > 10 and negatives > 10

    def test_shuffled_copy_equal_under_oracle(self):
        rng = random.Random(7)
        for _ in range(100):
            a = random_homogeneous(rng, "A", max_props=4, max_methods=3)
            props = list(a.spec.properties)
            methods = list(a.sig.methods)
            rng.shuffle(props)
            rng.shuffle(methods)
            b = homog("B", props, methods)
            assert eq_type(a, b)
            assert _brute_force_eq_type(a, b)


def _brute_force_eq_type(a: HomogeneousClass, b: HomogeneousClass) -> bool:
    if len(a.spec) != len(b.spec) or len(a.sig) != len(b.sig):
        return False
    prop_ok = any(
        all(eq_property(p, q) for p, q in zip(a.spec.properties, perm))
        for perm in itertools.permutations(b.spec.properties)
    )
    method_ok = any(
        all(eq_method(m, n) for m, n in zip(a.sig.methods, perm))
        for perm in itertools.permutations(b.sig.methods)
    )
    return prop_ok and method_ok


class TestSubtype:
    def test_reflexive(self, car):
        assert subtype_of(car, car)

    def test_subset_is_subtype(self, car):
        sub = homog("Sub", [car.spec.properties[0]], [car.sig.methods[0]])
        assert subtype_of(sub, car)
        assert not subtype_of(car, sub)

    def test_value_mismatch_breaks_subtype(self):
        a = homog("A", [prop("wheels", INT, 2)])
        b = homog("B", [prop("wheels", INT, 4), prop("color", TEXT)])
        assert not subtype_of(a, b)


class TestKeys:
    def test_property_key_agrees_with_eq(self):
        rng = random.Random(99)
        from randgen import PROP_NAMES, random_property

        for _ in range(500):
            a = random_property(rng, rng.choice(PROP_NAMES))
            b = random_property(rng, rng.choice(PROP_NAMES))
            assert (property_key(a) == property_key(b)) == eq_property(a, b)

    def test_method_key_agrees_with_eq(self):
        rng = random.Random(98)
        from randgen import METHOD_NAMES, random_method

        for _ in range(500):
            a = random_method(rng, rng.choice(METHOD_NAMES))
            b = random_method(rng, rng.choice(METHOD_NAMES))
            assert (method_key(a) == method_key(b)) == eq_method(a, b)


class TestFlatten:
    def test_core_members_come_first(self, vehicles):
        t = flatten_type(vehicles, 1)
        assert t.name == "Car"
        assert [p.name for p in t.spec] == ["color", "doors", "wheels"]
        assert [m.name for m in t.sig] == ["drive", "stop"]

    def test_second_type(self, vehicles):
        t = flatten_type(vehicles, 2)
        assert t.name == "Motorcycle"
        assert [p.name for p in t.spec] == ["color", "wheels"]
        assert [m.name for m in t.sig] == ["drive"]

    def test_index_is_one_based(self, vehicles):
        with pytest.raises(IndexError):
            flatten_type(vehicles, 0)
        with pytest.raises(IndexError):
            flatten_type(vehicles, 3)

    def test_types_of_homogeneous_is_singleton(self, car):
        assert types_of(car) == [car]

    def test_types_of_heterogeneous(self, vehicles):
        ts = types_of(vehicles)
        assert [t.name for t in ts] == ["Car", "Motorcycle"]


class TestMetrics:
    def test_counts(self, car, motorcycle):
        assert metrics_of(car).dimension == 3
        assert metrics_of(car).functionality == 2
        assert metrics_of(motorcycle).dimension == 2
        assert metrics_of(motorcycle).functionality == 1


class TestValidate:
    def test_fixtures_valid(self, car, motorcycle, boat, nooverlap, carplus,
                            coloronly, vehicles):
        for c in (car, motorcycle, boat, nooverlap, carplus, coloronly, vehicles):
            assert validate(c) == []

    def test_bad_class_name(self):
        c = homog("1bad", [prop("x", INT)])
        assert any("class name" in v for v in validate(c))

    def test_duplicate_property_name(self):
        c = homog("A", [prop("x", INT), prop("x", REAL)])
        assert any("duplicate property name 'x'" in v for v in validate(c))

    def test_value_datatype_mismatch(self):
        c = homog("A", [Property("x", INT, Value(TEXT, "red"))])
        assert any("tagged text" in v for v in validate(c))

    def test_nonconforming_literal(self):
        c = homog("A", [Property("x", INT, Value(INT, True))])
        assert any("does not conform" in v for v in validate(c))

    def test_empty_class_rejected(self):
        c = homog("A")
        assert any("neither properties nor methods" in v for v in validate(c))

    def test_equivalent_methods_rejected(self):
        c = homog("A", [], [method("f", INT), Method("f", (Parameter("z", INT),))])
        assert any("appears twice" in v for v in validate(c))

    def test_overloads_allowed(self):
        c = homog("A", [], [method("f", INT), method("f", INT, INT)])
        assert validate(c) == []

    def test_duplicate_param_names(self):
        m = Method("f", (Parameter("a", INT), Parameter("a", REAL)))
        c = homog("A", [], [m])
        assert any("duplicate parameter names" in v for v in validate(c))

    def test_heterogeneous_needs_two_projections(self):
        c = HeterogeneousClass(
            "H",
            Specification((prop("x", INT),)),
            Signature(),
            (Projection("A", Specification((prop("y", INT),)), Signature()),),
        )
        assert any("at least 2 are required" in v for v in validate(c))

    def test_projection_duplicating_core_property(self):
        c = HeterogeneousClass(
            "H",
            Specification((prop("x", INT),)),
            Signature(),
            (
                Projection("A", Specification((prop("x", INT),)), Signature()),
                Projection("B", Specification((prop("y", INT),)), Signature()),
            ),
        )
        assert any(
            "property 'x' is equivalent to a core property" in v for v in validate(c)
        )

    def test_projection_core_name_collision(self):
        c = HeterogeneousClass(
            "H",
            Specification((prop("x", INT),)),
            Signature(),
            (
                Projection("A", Specification((prop("x", REAL),)), Signature()),
                Projection("B", Specification((prop("y", INT),)), Signature()),
            ),
        )
        assert any("collides with a core property name" in v for v in validate(c))

    def test_equivalent_flattened_types_rejected(self):
        c = HeterogeneousClass(
            "H",
            Specification((prop("x", INT),)),
            Signature(),
            (
                Projection("A", Specification((prop("y", INT, 1),)), Signature()),
                Projection("B", Specification((prop("y", INT, 1),)), Signature()),
            ),
        )
        assert any("'A' and 'B' of 'H' are equivalent" in v for v in validate(c))

    def test_duplicate_projection_names_rejected(self):
        c = HeterogeneousClass(
            "H",
            Specification((prop("x", INT),)),
            Signature(),
            (
                Projection("A", Specification((prop("y", INT),)), Signature()),
                Projection("A", Specification((prop("z", INT),)), Signature()),
            ),
        )
        assert any("duplicate projection type name 'A'" in v for v in validate(c))

    def test_empty_type_rejected(self):
        c = HeterogeneousClass(
            "H",
            Specification(),
            Signature(),
            (
                Projection("A", Specification(), Signature()),
                Projection("B", Specification((prop("y", INT),)), Signature()),
            ),
        )
        assert any("defines an empty type" in v for v in validate(c))


class TestWarnings:
    def test_empty_core_warns(self):
        c = HeterogeneousClass(
            "H",
            Specification(),
            Signature(),
            (
                Projection("A", Specification((prop("x", INT),)), Signature()),
                Projection("B", Specification((prop("y", INT),)), Signature()),
            ),
        )
        assert validate(c) == []
        assert any("core of 'H' is empty" in w for w in warnings_for(c))

    def test_empty_projection_warns(self):
        c = HeterogeneousClass(
            "H",
            Specification((prop("x", INT),)),
            Signature(),
            (
                Projection("A", Specification(), Signature()),
                Projection("B", Specification((prop("y", INT),)), Signature()),
            ),
        )
        assert validate(c) == []
        assert any("projection 'A' of 'H' is empty" in w for w in warnings_for(c))

    def test_homogeneous_never_warns(self, car):
        assert warnings_for(car) == []


class TestCanonicalize:
    def test_idempotent(self, vehicles, car):
        for c in (vehicles, car):
            once = canonicalize(c)
            assert canonicalize(once) == once

    def test_sorts_properties_by_name(self):
        c = homog("A", [prop("z", INT), prop("a", INT)])
        assert [p.name for p in canonicalize(c).spec] == ["a", "z"]

    def test_sorts_methods_by_signature(self):
        c = homog("A", [prop("x", INT)],
                  [method("f", INT, INT), method("f"), method("a")])
        names = [(m.name, len(m.params)) for m in canonicalize(c).sig]
        assert names == [("a", 0), ("f", 0), ("f", 2)]

    def test_sorts_projections_by_type_name(self, vehicles):
        shuffled = HeterogeneousClass(
            vehicles.name,
            vehicles.core_spec,
            vehicles.core_sig,
            tuple(reversed(vehicles.projections)),
        )
        canon = canonicalize(shuffled)
        assert [p.type_name for p in canon.projections] == ["Car", "Motorcycle"]

    def test_preserves_type_equivalence(self):
        rng = random.Random(5)
        for _ in range(100):
            c = random_homogeneous(rng, "A")
            assert eq_type(c, canonicalize(c))
