import random

import pytest

from twistalg import catalog as cat
from twistalg.phase import PhaseCoefficient
from twistalg.polynomial import Polynomial


def random_poly(pres, rng, terms=3, max_len=3):
    acc = Polynomial.zero((pres,))
    for _ in range(terms):
        word = [pres.letters[rng.randrange(pres.n)].name for _ in range(rng.randint(0, max_len))]
        c = PhaseCoefficient.mu(rng.randint(-3, 3), rng.choice((1, -1, 2, 3)))
        acc = acc + Polynomial.word(pres, word).scale(c)
    return acc


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture(params=["c4", "sl2h", "forms"])
def pres(request):
    return getattr(cat, request.param)()
