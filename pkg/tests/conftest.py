import random
from pathlib import Path

import pytest

from kpeaked.generate import (  # noqa: F401
    names,
    random_ac,
    random_av,
    random_axis,
    random_dc,
    random_dv,
    random_votes,
)

DATA = Path(__file__).parent / "data"


@pytest.fixture
def rng():
    return random.Random(12345)
