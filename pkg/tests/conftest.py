import json
import random
from fractions import Fraction

import pytest

from relmilnor.qpoly import Polynomial, PolyRing, WeightSystem, parse_poly


@pytest.fixture
def ring2():
    return PolyRing(("x", "y"))


@pytest.fixture
def ring3():
    return PolyRing(("x", "y", "z"))


@pytest.fixture
def w11():
    return WeightSystem((1, 1))


@pytest.fixture
def w223():
    return WeightSystem((2, 2, 3))


@pytest.fixture
def phi_xy(ring2):
    return parse_poly("x*y", ring2)


@pytest.fixture
def f_cubic(ring2):
    return parse_poly("x^3 + y^3", ring2)


def random_poly(ring, rng, max_total_degree=4, terms=4, coeff_bound=5):
    """Random not-necessarily-homogeneous sparse polynomial, possibly zero."""
    out = {}
    for _ in range(rng.randint(1, terms)):
        exps = tuple(rng.randint(0, max_total_degree) for _ in range(ring.nvars))
        if sum(exps) > max_total_degree:
            exps = tuple(e % 2 for e in exps)
        num = rng.randint(-coeff_bound, coeff_bound)
        if num:
            out[exps] = Fraction(num, rng.randint(1, coeff_bound))
    return Polynomial(ring, out)


def random_nonzero_poly(ring, rng, **kwargs):
    for _ in range(64):
        f = random_poly(ring, rng, **kwargs)
        if not f.is_zero:
            return f
    return ring.one()


def write_problem(tmp_path, name="problem.json", **fields):
    path = tmp_path / name
    path.write_text(json.dumps(fields))
    return str(path)
