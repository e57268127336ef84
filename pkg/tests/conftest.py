import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from copsrobbers.graph import generate


@pytest.fixture(scope="session")
def petersen():
    return generate("petersen")


@pytest.fixture(scope="session")
def c4():
    return generate("cycle", {"k": 4})


@pytest.fixture(scope="session")
def c5():
    return generate("cycle", {"k": 5})


@pytest.fixture(scope="session")
def c6():
    return generate("cycle", {"k": 6})


@pytest.fixture(scope="session")
def p4():
    return generate("path", {"k": 4})


@pytest.fixture(scope="session")
def k4():
    return generate("complete", {"k": 4})


@pytest.fixture(scope="session")
def grid33():
    return generate("grid", {"r": 3, "c": 3})
