import random

import pytest

from permintervals import IntervalClass, validate
from permintervals.generate import random_instance_raw

# Running example 1: one unsigned permutation against the identity.
EX1_RAW = [[1, 2, 3, 4, 5, 6, 7], [7, 2, 1, 3, 6, 4, 5]]
# Running example 2: a signed permutation with conserved structure.
EX2_RAW = [[1, 2, 3, 4, 5, 6, 7], [1, -3, -2, 6, -4, -5, 7]]

ALL_CLASSES = list(IntervalClass)

CONSERVED = (IntervalClass.CONSERVED, IntervalClass.IRREDUCIBLE_CONSERVED)


@pytest.fixture
def ex1():
    return validate(EX1_RAW, IntervalClass.COMMON)


@pytest.fixture
def ex2():
    return validate(EX2_RAW, IntervalClass.CONSERVED)


def make_instance(rng: random.Random, n, k, interval_class, signed=None):
    """Random instance satisfying the class preconditions."""
    conserved = interval_class in CONSERVED
    if signed is None:
        signed = rng.random() < 0.6
    raws = random_instance_raw(rng, n, k, signed=signed, conserved=conserved)
    return validate(raws, interval_class)


def identity_copies(n, k):
    return validate([list(range(1, n + 1))] * k, IntervalClass.COMMON)
