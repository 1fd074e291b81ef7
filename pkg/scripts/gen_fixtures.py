#!/usr/bin/env python3
"""Regenerate the committed test fixtures and golden files.

Run from the repository root:

    python3 scripts/gen_fixtures.py

The outputs are deterministic (fixed class definitions, fixed
timestamps), so rerunning the script leaves a clean working tree unless
the engine's canonical form changed on purpose.
"""

from __future__ import annotations

from pathlib import Path

from oodn import (
    DataType,
    HeterogeneousClass,
    HomogeneousClass,
    Method,
    Parameter,
    Property,
    Signature,
    Specification,
    Strategy,
    Value,
    canonicalize,
    difference,
    emit_descriptor,
    flatten_type,
    intersection,
    save,
    serialize_class,
    symmetric_difference,
    union,
)
from oodn.exploiters import Lineage

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "tests" / "fixtures"
GOLDEN = ROOT / "tests" / "golden"
MATERIALIZER = ROOT / "materializer" / "fixtures"

EMITTED_AT = "2026-08-17T00:00:00Z"


def _int(n: int) -> Value:
    return Value(DataType.INTEGER, n)


def build_car() -> HomogeneousClass:
    return HomogeneousClass(
        "Car",
        Specification(
            (
                Property("wheels", DataType.INTEGER, _int(4)),
                Property("color", DataType.TEXT),
                Property("doors", DataType.INTEGER, _int(4)),
            )
        ),
        Signature(
            (
                Method(
                    "drive",
                    (Parameter("speed", DataType.INTEGER),),
                    DataType.BOOLEAN,
                    "car/drive#1",
                ),
                Method("stop", (), None, "car/stop#1"),
            )
        ),
    )


def build_motorcycle() -> HomogeneousClass:
    return HomogeneousClass(
        "Motorcycle",
        Specification(
            (
                Property("wheels", DataType.INTEGER, _int(2)),
                Property("color", DataType.TEXT),
            )
        ),
        Signature(
            (
                Method(
                    "drive",
                    (Parameter("speed", DataType.INTEGER),),
                    DataType.BOOLEAN,
                    "moto/drive#1",
                ),
            )
        ),
    )


def build_boat() -> HomogeneousClass:
    return HomogeneousClass(
        "Boat",
        Specification(
            (
                Property("displacement", DataType.REAL),
                Property("color", DataType.TEXT),
            )
        ),
        Signature(
            (
                Method(
                    "sail",
                    (Parameter("knots", DataType.REAL),),
                    None,
                    "boat/sail#1",
                ),
            )
        ),
    )


def build_nooverlap() -> HomogeneousClass:
    return HomogeneousClass(
        "NoOverlap",
        Specification((Property("mass", DataType.REAL),)),
        Signature((Method("weigh", (), DataType.REAL, "nooverlap/weigh#1"),)),
    )


def build_carplus() -> HomogeneousClass:
    car = build_car()
    return HomogeneousClass(
        "CarPlus",
        Specification(
            car.spec.properties + (Property("sunroof", DataType.BOOLEAN),)
        ),
        Signature(
            (
                Method(
                    "drive",
                    (Parameter("speed", DataType.INTEGER),),
                    DataType.BOOLEAN,
                    "carplus/drive#1",
                ),
                Method("stop", (), None, "carplus/stop#1"),
            )
        ),
    )


def build_coloronly() -> HomogeneousClass:
    return HomogeneousClass(
        "ColorOnly", Specification((Property("color", DataType.TEXT),)), Signature()
    )


def main() -> None:
    for directory in (FIXTURES, GOLDEN, MATERIALIZER):
        directory.mkdir(parents=True, exist_ok=True)

    car = build_car()
    motorcycle = build_motorcycle()
    boat = build_boat()
    nooverlap = build_nooverlap()
    carplus = build_carplus()
    coloronly = build_coloronly()

    vehicles = union([car, motorcycle], Strategy.NAIVE, "Vehicles")

    save(car, FIXTURES / "car.cls")
    save(motorcycle, FIXTURES / "motorcycle.cls")
    save(boat, FIXTURES / "boat.cls")
    save(nooverlap, FIXTURES / "nooverlap.cls")
    save(carplus, FIXTURES / "carplus.cls")
    save(coloronly, FIXTURES / "coloronly.cls")
    save(vehicles.result, FIXTURES / "vehicles.cls")

    save(vehicles.result, GOLDEN / "union_car_motorcycle.cls")
    save(
        union([car, boat], Strategy.NAIVE, "Fleet").result,
        GOLDEN / "union_car_boat.cls",
    )
    save(
        union([car, car], Strategy.NAIVE, "Twice").result,
        GOLDEN / "union_car_car.cls",
    )
    save(
        union([coloronly, motorcycle], Strategy.NAIVE, "Wheeled").result,
        GOLDEN / "union_coloronly_motorcycle.cls",
    )
    save(
        intersection([car, motorcycle], Strategy.NAIVE, "Common").result,
        GOLDEN / "intersection_car_motorcycle.cls",
    )
    save(
        difference(car, [motorcycle], Strategy.NAIVE).result,
        GOLDEN / "difference_car_motorcycle.cls",
    )
    save(
        difference(car, [motorcycle, boat], Strategy.NAIVE).result,
        GOLDEN / "difference_car_motorcycle_boat.cls",
    )
    save(
        symmetric_difference(car, motorcycle, Strategy.NAIVE, "Contrast").result,
        GOLDEN / "symdiff_car_motorcycle.cls",
    )
    save(
        symmetric_difference(car, carplus, Strategy.NAIVE).result,
        GOLDEN / "symdiff_car_carplus.cls",
    )

    emit_descriptor(
        vehicles.result,
        vehicles.lineage,
        MATERIALIZER / "vehicles.descriptor.json",
        emitted_at=EMITTED_AT,
    )
    emit_descriptor(
        car,
        Lineage(op="emit", inputs=("Car",)),
        MATERIALIZER / "car.descriptor.json",
        emitted_at=EMITTED_AT,
    )
    canon = canonicalize(vehicles.result)
    assert isinstance(canon, HeterogeneousClass)
    for index, stem in ((1, "expected_car"), (2, "expected_motorcycle")):
        flat = flatten_type(canon, index)
        (MATERIALIZER / f"{stem}.cls").write_bytes(serialize_class(flat))

    print(f"fixtures: {len(list(FIXTURES.glob('*.cls')))} class files")
    print(f"golden:   {len(list(GOLDEN.glob('*.cls')))} class files")
    print(f"materializer: {len(list(MATERIALIZER.iterdir()))} files")


if __name__ == "__main__":
    main()
