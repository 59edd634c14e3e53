"""Fixtures compartidas por las pruebas del paquete"""

from pathlib import Path

import pytest

from invariantes_cuanticos.lie import build_root_system


@pytest.fixture(scope="session")
def sl2():
    return build_root_system("A", 1)


@pytest.fixture(scope="session")
def sl3():
    return build_root_system("A", 2)


@pytest.fixture(scope="session")
def ejemplos() -> Path:
    return Path(__file__).resolve().parent / "invariantes_cuanticos" / "ejemplos"
