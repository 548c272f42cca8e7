import random

import pytest


@pytest.fixture
def rng():
    return random.Random(20080)


def rand_rat(rng, num=9, den=9):
    from fractions import Fraction

    return Fraction(rng.randint(-num, num), rng.randint(1, den))
