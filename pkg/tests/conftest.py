"""Shared test helpers."""

import random
from itertools import product

from codebounds.oracle import Code, Word


def random_systematic_code(rng: random.Random) -> Code:
    """A random nonlinear systematic code at tiny parameters."""
    q = rng.choice([2, 3, 5])
    k = rng.randint(1, 2 if q == 5 else 3)
    m = rng.randint(1, 3)
    n = k + m
    prefixes = list(product(range(q), repeat=k))
    words = tuple(
        Word(p + tuple(rng.randrange(q) for _ in range(m)), q) for p in prefixes
    )
    return Code(q, n, words, systematic_k=k)
