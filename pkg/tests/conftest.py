from __future__ import annotations

import pytest

from suplat.datasets import builtin_structure


@pytest.fixture(scope="session")
def qubit():
    return builtin_structure("pauli-qubit")


@pytest.fixture(scope="session")
def cabello():
    return builtin_structure("cabello-3")
