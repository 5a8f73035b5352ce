import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

from z2index import fixtures  # noqa: E402
from z2index.complexes import antipodal_cycle, barycentric_subdivision, crosspolytope_sphere  # noqa: E402


@pytest.fixture
def c4():
    return antipodal_cycle(2)


@pytest.fixture
def octahedron():
    return crosspolytope_sphere(2)


@pytest.fixture
def two_points():
    return crosspolytope_sphere(0)


@pytest.fixture
def sd_c4():
    return barycentric_subdivision(antipodal_cycle(2))


FIXTURE_DIR = Path(__file__).parent.parent / "fixtures"
