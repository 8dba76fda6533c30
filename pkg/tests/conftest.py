import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from geocover.multigraph import Multigraph, build_standard
from geocover.paths import PathPool
from geocover.subdivision import two_subdivision


@pytest.fixture(scope="session")
def k4():
    return build_standard("complete", [4])


@pytest.fixture(scope="session")
def k4_sub(k4):
    return two_subdivision(k4)


@pytest.fixture(scope="session")
def k4_pool(k4_sub):
    return PathPool(k4_sub)


@pytest.fixture(scope="session")
def p2_sub():
    return two_subdivision(build_standard("path", [1]))


@pytest.fixture(scope="session")
def p2_pool(p2_sub):
    return PathPool(p2_sub)


@pytest.fixture(scope="session")
def triangle_sub():
    return two_subdivision(build_standard("cycle", [3]))


@pytest.fixture(scope="session")
def triangle_pool(triangle_sub):
    return PathPool(triangle_sub)
