import random
from fractions import Fraction
from itertools import combinations

import pytest

from hardlef import Form, StructureModel, Vector


MODEL_POOL = {
    3: ["(0,0,12)", "(0,0,0)"],
    4: ["(0,0,12,0)", "(0,0,0,0)", "(0,0,12,13)"],
    5: ["(0,0,0,0,12+34)", "(0,0,0,12,13+24)", "(0,0,12,13,14+23)"],
    6: ["(0,0,0,0,12+34,0)", "(0,0,12,13,14+23,0)", "(0,0,12,0,0,0)"],
}


def random_fraction(rng, span=6):
    num = rng.randint(-span, span)
    den = rng.randint(1, 4)
    return Fraction(num, den)


def random_form(rng, n_gen, degree, max_terms=3):
    masks = list(combinations(range(1, n_gen + 1), degree))
    if not masks:
        return Form.zero(n_gen, degree)
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        idx = rng.choice(masks)
        terms[idx] = random_fraction(rng)
    out = Form.zero(n_gen, degree)
    for idx, coeff in terms.items():
        out = out + Form.monomial(n_gen, idx, coeff)
    return out


def random_vector(rng, n_gen):
    return Vector([random_fraction(rng, 3) for _ in range(n_gen)])


def random_model(rng):
    n = rng.choice(sorted(MODEL_POOL))
    return StructureModel.from_salamon(rng.choice(MODEL_POOL[n]))


@pytest.fixture
def rng():
    return random.Random(20240817)
