from pathlib import Path

import pytest

from intertwine.fields import RATIONALS
from intertwine.pipeline import build_standard_base
from intertwine.simplicial import cohomology_ring, load_complex


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def rings(data_dir):
    """Rational cohomology rings of the shipped complexes, by name."""
    out = {}
    for path in sorted((data_dir / "complexes").glob("*.cx")):
        K = load_complex(path)
        out[K.name] = cohomology_ring(K, RATIONALS)
    return out


@pytest.fixture(scope="session")
def standard_base(data_dir):
    return build_standard_base(data_dir)
