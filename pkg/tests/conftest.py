import random

from cuphom.exterior import blade_basis
from cuphom.forms import ThreeForm


def random_form(rng, b, coeff_max=9):
    """Random form at rank b: a mix of zero, sparse and dense coefficient fills."""
    mode = rng.random()
    coeffs = {}
    if mode >= 0.1:
        keep = 0.3 if mode < 0.5 else 1.0
        for t in blade_basis(b, 3):
            if rng.random() <= keep:
                a = rng.randint(-coeff_max, coeff_max)
                if a:
                    coeffs[t] = a
    return ThreeForm.from_coeffs(b, coeffs)


def seeded(seed):
    return random.Random(seed)
