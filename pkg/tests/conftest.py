import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from monostack.monoid import validate


@pytest.fixture(scope="session")
def nat():
    return validate([(1,)])


@pytest.fixture(scope="session")
def nat2():
    return validate([(1, 0), (0, 1)])


@pytest.fixture(scope="session")
def nat3():
    return validate([(1, 0, 0), (0, 1, 0), (0, 0, 1)])


@pytest.fixture(scope="session")
def nonsimplicial():
    """Rank-3 sharp fs monoid with four extreme rays (facets a1, a2, a1+a3, a2+a3)."""
    return validate([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)])
