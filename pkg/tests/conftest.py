import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from catalog import build_group  # noqa: E402


@pytest.fixture(scope="session")
def group():
    """Session-wide cache of catalog groups, so character tables are built once."""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = build_group(name)
        return cache[name]

    return get


@pytest.fixture(scope="module")
def s4(group):
    return group("S4")


@pytest.fixture(scope="module")
def a5(group):
    return group("A5")


@pytest.fixture(scope="module")
def c6(group):
    return group("C6")
