from pathlib import Path

import pytest

from covgran import Covering, Universe

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def u3():
    return Universe.of("1", "2", "3")


@pytest.fixture(scope="session")
def u4():
    return Universe.of("1", "2", "3", "4")


@pytest.fixture(scope="session")
def beta0(u3):
    """Three overlapping blocks sharing one element; the running example."""
    return Covering.from_names(u3, [["1", "3"], ["2", "3"], ["3"]])


@pytest.fixture(scope="session")
def partition3(u3):
    return Covering.from_names(u3, [["1"], ["2"], ["3"]])


@pytest.fixture(scope="session")
def cycle4(u4):
    """The four edges of a 4-cycle as blocks."""
    return Covering.from_names(
        u4, [["1", "2"], ["2", "3"], ["3", "4"], ["4", "1"]]
    )
