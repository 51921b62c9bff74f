"""Random instance generation for tests, benchmarks and the CLI."""

from __future__ import annotations

import random


def random_instance_raw(
    rng: random.Random,
    n: int,
    k: int,
    *,
    signed: bool = False,
    conserved: bool = False,
) -> list[list[int]]:
    """Raw signed sequences: the first permutation is the identity, the rest
    are uniform shuffles.  With conserved=True every permutation starts with
    +1 and ends with +n (required by the conserved classes); with signed=True
    the remaining elements flip sign with probability one half."""
    perms = [list(range(1, n + 1))]
    for _ in range(k - 1):
        if conserved and n >= 2:
            middle = list(range(2, n))
            rng.shuffle(middle)
            p = [1] + middle + [n]
        else:
            p = list(range(1, n + 1))
            rng.shuffle(p)
        if signed:
            lo = 1 if conserved else 0
            hi = len(p) - 1 if conserved else len(p)
            for i in range(lo, hi):
                if rng.random() < 0.5:
                    p[i] = -p[i]
        perms.append(p)
    return perms
