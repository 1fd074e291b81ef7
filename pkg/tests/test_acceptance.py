"""Acceptance gate: one test per required behavior, with timing bounds.

Each test prints a single PASS line describing what was checked; run
with ``pytest -v tests/test_acceptance.py`` for the per-criterion
verdicts.
"""

from __future__ import annotations

import math
import random
import time

import pytest

from oodn import (
    AnyClass,
    DoesNotExist,
    HeterogeneousClass,
    HomogeneousClass,
    Signature,
    Specification,
    Strategy,
    difference,
    eq_method,
    eq_property,
    eq_type,
    intersection,
    load,
    run_cli,
    save,
    serialize_class,
    symmetric_difference,
    types_of,
    union,
    validate,
)

from conftest import FIXTURES, GOLDEN
from randgen import random_class, random_classes, random_homogeneous

pytestmark = pytest.mark.acceptance


def _same_type_multiset(xs, ys) -> bool:
    if len(xs) != len(ys):
        return False
    remaining = list(ys)
    for x in xs:
        for i, y in enumerate(remaining):
            if eq_type(x, y):
                del remaining[i]
                break
        else:
            return False
    return True


def _members(c: AnyClass):
    props = []
    methods = []
    for t in types_of(c):
        props.extend(t.spec.properties)
        methods.extend(t.sig.methods)
    return props, methods


def test_fixture_golden_suite():
    """Union, intersection, difference and symmetric difference on the
    fixture classes reproduce the golden files byte-exactly, in under
    one second."""
    car = load(FIXTURES / "car.cls")
    motorcycle = load(FIXTURES / "motorcycle.cls")
    boat = load(FIXTURES / "boat.cls")
    carplus = load(FIXTURES / "carplus.cls")
    coloronly = load(FIXTURES / "coloronly.cls")

    started = time.perf_counter()
    produced = {
        "union_car_motorcycle.cls": union(
            [car, motorcycle], Strategy.NAIVE, "Vehicles"
        ).result,
        "union_car_boat.cls": union([car, boat], Strategy.NAIVE, "Fleet").result,
        "union_car_car.cls": union([car, car], Strategy.NAIVE, "Twice").result,
        "union_coloronly_motorcycle.cls": union(
            [coloronly, motorcycle], Strategy.NAIVE, "Wheeled"
        ).result,
        "intersection_car_motorcycle.cls": intersection(
            [car, motorcycle], Strategy.NAIVE, "Common"
        ).result,
        "difference_car_motorcycle.cls": difference(
            car, [motorcycle], Strategy.NAIVE
        ).result,
        "difference_car_motorcycle_boat.cls": difference(
            car, [motorcycle, boat], Strategy.NAIVE
        ).result,
        "symdiff_car_motorcycle.cls": symmetric_difference(
            car, motorcycle, Strategy.NAIVE, "Contrast"
        ).result,
        "symdiff_car_carplus.cls": symmetric_difference(
            car, carplus, Strategy.NAIVE
        ).result,
    }
    for name, result in produced.items():
        assert serialize_class(result) == (GOLDEN / name).read_bytes(), name
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    print(f"PASS fixture golden suite: {len(produced)} golden files byte-exact"
          f" in {elapsed * 1000:.0f} ms")


def test_counter_law():
    """Naive tuples_considered equals the product formula
    D(t_1)x...xD(t_n) + func(t_1)x...xfunc(t_n), exactly."""
    car = load(FIXTURES / "car.cls")
    motorcycle = load(FIXTURES / "motorcycle.cls")
    stats = union([car, motorcycle], Strategy.NAIVE, "Vehicles").stats
    assert stats.tuples_considered == 3 * 2 + 2 * 1 == 8

    rng = random.Random(202608)
    cases = 0
    for _ in range(400):
        inputs = [
            random_homogeneous(rng, max_props=6, max_methods=4)
            for _ in range(rng.randint(2, 4))
        ]
        # The formula, evaluated straight off the input definitions.
        expected = math.prod(len(c.spec.properties) for c in inputs) + math.prod(
            len(c.sig.methods) for c in inputs
        )
        stats = union(inputs, Strategy.NAIVE).stats
        assert stats.tuples_considered == expected
        cases += 1
    print(f"PASS counter law: fixture case = 8 exactly,"
          f" {cases} randomized cases up to n=4 exact")


def _types_or_none(fn):
    try:
        return types_of(fn().result)
    except DoesNotExist:
        return None


def test_oracle_equivalence():
    """Keyed strategy matches the naive strategy per flattened type for
    all four exploiters across >= 1000 randomized instances, < 10 s."""
    rng = random.Random(20260810)
    started = time.perf_counter()
    instances = 0
    op_runs = 0
    for _ in range(1000):
        classes = random_classes(rng, rng.randint(2, 5), p_heterogeneous=0.25)
        ops = [
            lambda s: union(classes, s),
            lambda s: intersection(classes, s),
            lambda s: difference(classes[0], classes[1:], s),
            lambda s: symmetric_difference(classes[0], classes[1], s),
        ]
        for op in ops:
            naive = _types_or_none(lambda: op(Strategy.NAIVE))
            keyed = _types_or_none(lambda: op(Strategy.KEYED))
            if naive is None or keyed is None:
                assert naive is None and keyed is None
            else:
                assert _same_type_multiset(naive, keyed)
            op_runs += 1
        instances += 1
    elapsed = time.perf_counter() - started
    assert instances >= 1000
    assert elapsed < 10.0
    print(f"PASS oracle equivalence: {instances} instances, {op_runs} op pairs,"
          f" naive == keyed per flattened type, in {elapsed:.1f} s")


def test_law_union_idempotence():
    """types_of(union(A, A)) is equivalent element-wise to types_of(A)."""
    rng = random.Random(20260811)
    for _ in range(500):
        a = random_class(rng)
        u = union([a, a], Strategy.KEYED).result
        assert _same_type_multiset(types_of(u), types_of(a))
        assert validate(u) == []
    print("PASS union idempotence: 500 cases")


def test_law_commutativity_up_to_canonical_form():
    """union, intersection and symmetric difference are order-insensitive
    up to canonical form (flattened-type multisets match)."""
    rng = random.Random(20260812)
    for _ in range(500):
        a = random_class(rng)
        b = random_class(rng)
        ab = union([a, b], Strategy.KEYED).result
        ba = union([b, a], Strategy.KEYED).result
        assert _same_type_multiset(types_of(ab), types_of(ba))

        for op in (
            lambda x, y: intersection([x, y], Strategy.KEYED),
            lambda x, y: symmetric_difference(x, y, Strategy.KEYED),
        ):
            first = _types_or_none(lambda: op(a, b))
            second = _types_or_none(lambda: op(b, a))
            if first is None or second is None:
                assert first is None and second is None
            else:
                assert _same_type_multiset(first, second)
    print("PASS commutativity up to canonical form: 500 cases"
          " (union, intersection, symmetric difference)")


def test_law_core_equals_intersection():
    """Whenever intersection(A, B) exists and union(A, B) is
    heterogeneous, the union's core matches the intersection's members
    one-to-one."""
    rng = random.Random(20260813)
    applicable = 0
    for _ in range(500):
        a = random_class(rng)
        b = random_class(rng)
        try:
            inter = intersection([a, b], Strategy.KEYED).result
        except DoesNotExist:
            continue
        uni = union([a, b], Strategy.KEYED).result
        if not isinstance(uni, HeterogeneousClass):
            continue
        applicable += 1
        core = HomogeneousClass("Core", uni.core_spec, uni.core_sig)
        assert eq_type(core, inter)
    assert applicable >= 100
    print(f"PASS core-equals-intersection: {applicable} applicable of 500 cases")


def test_law_difference_disjointness_and_maximality():
    """No result member is equivalent to any subtrahend member, and every
    minuend member with no subtrahend equivalent survives (exhaustive
    member scan)."""
    rng = random.Random(20260814)
    existing = 0
    for _ in range(500):
        minuend = random_class(rng)
        subtrahends = random_classes(rng, rng.randint(1, 2))
        sub_props = []
        sub_methods = []
        for s in subtrahends:
            ps, ms = _members(s)
            sub_props.extend(ps)
            sub_methods.extend(ms)
        try:
            result = difference(minuend, subtrahends, Strategy.KEYED).result
        except DoesNotExist:
            # Existence fails only when the scan removes everything.
            for t in types_of(minuend):
                for p in t.spec:
                    assert any(eq_property(p, q) for q in sub_props)
                for m in t.sig:
                    assert any(eq_method(m, n) for n in sub_methods)
            continue
        existing += 1

        # Disjointness: exhaustive scan over every result member.
        res_props, res_methods = _members(result)
        for p in res_props:
            assert not any(eq_property(p, q) for q in sub_props)
        for m in res_methods:
            assert not any(eq_method(m, n) for n in sub_methods)

        # Maximality: each minuend type's untouched members survive as a
        # result type equivalent to the independently computed leftover.
        result_types = types_of(result)
        for t in types_of(minuend):
            kept_props = tuple(
                p for p in t.spec if not any(eq_property(p, q) for q in sub_props)
            )
            kept_methods = tuple(
                m for m in t.sig if not any(eq_method(m, n) for n in sub_methods)
            )
            if not kept_props and not kept_methods:
                continue
            expected = HomogeneousClass(
                "Expected", Specification(kept_props), Signature(kept_methods)
            )
            assert any(eq_type(expected, u) for u in result_types)
    assert existing >= 100
    print(f"PASS difference disjointness and maximality:"
          f" {existing} existing of 500 cases, exhaustive member scans")


def test_law_symmetric_difference_decomposition():
    """Flattened types of symmetric_difference(A, B) equal the
    deduplicated union of both directional differences' types."""
    rng = random.Random(20260815)
    existing = 0
    for _ in range(500):
        a = random_class(rng)
        b = random_class(rng)
        left = _types_or_none(lambda: difference(a, [b], Strategy.KEYED))
        right = _types_or_none(lambda: difference(b, [a], Strategy.KEYED))
        sym = _types_or_none(lambda: symmetric_difference(a, b, Strategy.KEYED))
        if sym is None:
            assert left is None and right is None
            continue
        existing += 1
        combined = list(left or []) + list(right or [])
        deduped = []
        for t in combined:
            if not any(eq_type(t, u) for u in deduped):
                deduped.append(t)
        assert _same_type_multiset(sym, deduped)
    assert existing >= 100
    print(f"PASS symmetric-difference decomposition:"
          f" {existing} existing of 500 cases")


def test_existence_conditions():
    """The three existence failures raise in-library and exit 2 at the
    CLI, writing no output file."""
    car = load(FIXTURES / "car.cls")
    nooverlap = load(FIXTURES / "nooverlap.cls")

    with pytest.raises(DoesNotExist):
        intersection([car, nooverlap])
    with pytest.raises(DoesNotExist):
        difference(car, [car])
    with pytest.raises(DoesNotExist):
        symmetric_difference(car, car)

    import tempfile
    from pathlib import Path

    with tempfile.TemporaryDirectory() as tmp:
        out = Path(tmp) / "out.cls"
        invocations = [
            ["intersect", str(FIXTURES / "car.cls"), str(FIXTURES / "nooverlap.cls")],
            ["diff", str(FIXTURES / "car.cls"), str(FIXTURES / "car.cls")],
            ["symdiff", str(FIXTURES / "car.cls"), str(FIXTURES / "car.cls")],
        ]
        for argv in invocations:
            assert run_cli([*argv, "-o", str(out)]) == 2
            assert not out.exists()
    print("PASS existence conditions: 3 in-library raises, 3 CLI exits with code 2")


def test_purity():
    """Serialized inputs are byte-identical before and after every
    exploiter call across a randomized suite."""
    rng = random.Random(20260816)
    checks = 0
    for _ in range(300):
        classes = random_classes(rng, rng.randint(2, 4))
        before = [serialize_class(c) for c in classes]
        for strategy in (Strategy.NAIVE, Strategy.KEYED):
            for op in (
                lambda s: union(classes, s),
                lambda s: intersection(classes, s),
                lambda s: difference(classes[0], classes[1:], s),
                lambda s: symmetric_difference(classes[0], classes[1], s),
            ):
                try:
                    op(strategy)
                except DoesNotExist:
                    pass
                checks += 1
        after = [serialize_class(c) for c in classes]
        assert before == after
    print(f"PASS purity: inputs byte-identical across {checks} exploiter calls")


def test_format_round_trip(tmp_path):
    """load-save-load is a fixpoint on every fixture and on 200
    randomized classes."""
    fixture_count = 0
    for path in sorted(FIXTURES.glob("*.cls")):
        c = load(path)
        first = tmp_path / f"first_{path.name}"
        save(c, first)
        again = load(first)
        second = tmp_path / f"second_{path.name}"
        save(again, second)
        assert first.read_bytes() == second.read_bytes()
        assert serialize_class(c) == path.read_bytes()
        fixture_count += 1

    rng = random.Random(20260817)
    for i in range(200):
        c = random_class(rng)
        first = tmp_path / "rand_a.cls"
        save(c, first)
        reloaded = load(first)
        second = tmp_path / "rand_b.cls"
        save(reloaded, second)
        assert first.read_bytes() == second.read_bytes()
        assert _same_type_multiset(types_of(reloaded), types_of(c))
    assert fixture_count == 7
    print(f"PASS format round trip: {fixture_count} fixtures + 200 randomized"
          f" classes reach the save fixpoint")
