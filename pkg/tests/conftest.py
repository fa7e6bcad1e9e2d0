import os
import random
from fractions import Fraction

import pytest
from hypothesis import settings, HealthCheck

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def seeded_rng() -> random.Random:
    """RNG for randomized-parameter sweeps; Q2REP_SEED overrides the default."""
    return random.Random(int(os.environ.get("Q2REP_SEED", "20250809")))


def random_rational(rng: random.Random, lo: int = -9, hi: int = 9) -> Fraction:
    num = rng.randint(lo, hi)
    den = rng.randint(1, 9)
    return Fraction(num, den)


@pytest.fixture
def rng() -> random.Random:
    return seeded_rng()
