import random
from fractions import Fraction

import pytest

from unitri.freealg import NcPoly


def rand_coeff(rng, height=10, allow_zero=False):
    num = rng.randint(-height, height)
    if not allow_zero:
        while num == 0:
            num = rng.randint(-height, height)
    return Fraction(num, rng.randint(1, height))


def rand_poly(rng, rank, max_degree, height=10, max_terms=4, vars_from=1):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        length = rng.randint(0, max_degree)
        word = tuple(rng.choices(range(vars_from, rank + 1), k=length))
        c = terms.get(word, 0) + rand_coeff(rng, height)
        if c:
            terms[word] = c
        else:
            terms.pop(word, None)
    return NcPoly._raw(rank, terms)


@pytest.fixture
def rng():
    return random.Random(20120729)
