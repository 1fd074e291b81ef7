"""Shared fixtures and builders for the test suite."""

from __future__ import annotations

from pathlib import Path

import pytest

from oodn import (
    DataType,
    HomogeneousClass,
    Method,
    Parameter,
    Property,
    Signature,
    Specification,
    Value,
    load,
)

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


def prop(name: str, datatype: DataType, literal=None) -> Property:
    if literal is None:
        return Property(name, datatype)
    return Property(name, datatype, Value(datatype, literal))


def method(name: str, *param_types: DataType, returns: DataType | None = None,
           body_ref: str | None = None) -> Method:
    params = tuple(
        Parameter(f"a{i}", t) for i, t in enumerate(param_types)
    )
    return Method(name, params, returns, body_ref)


def homog(name: str, props=(), methods=()) -> HomogeneousClass:
    return HomogeneousClass(name, Specification(tuple(props)), Signature(tuple(methods)))


@pytest.fixture(scope="session")
def car():
    return load(FIXTURES / "car.cls")


@pytest.fixture(scope="session")
def motorcycle():
    return load(FIXTURES / "motorcycle.cls")


@pytest.fixture(scope="session")
def boat():
    return load(FIXTURES / "boat.cls")


@pytest.fixture(scope="session")
def nooverlap():
    return load(FIXTURES / "nooverlap.cls")


@pytest.fixture(scope="session")
def carplus():
    return load(FIXTURES / "carplus.cls")


@pytest.fixture(scope="session")
def coloronly():
    return load(FIXTURES / "coloronly.cls")


@pytest.fixture(scope="session")
def vehicles():
    return load(FIXTURES / "vehicles.cls")
