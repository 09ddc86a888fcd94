import random
from fractions import Fraction as Q

import pytest

from metlie import (Cochain, Matrix, QuadraticCocycle, Representation,
                    SymmetricForm)
from metlie.catalog import base_algebra
from metlie.linalg import lex_subsets


@pytest.fixture
def rng():
    return random.Random(20260808)


@pytest.fixture
def n2():
    return base_algebra("n2")


@pytest.fixture
def r3m1():
    return base_algebra("r3m1")


@pytest.fixture
def h1():
    return base_algebra("h1")


@pytest.fixture
def sl2():
    return base_algebra("sl2r")


@pytest.fixture
def su2():
    return base_algebra("su2")


def rotation_rep(l, weights, extra_trivial=0):
    """rho+ blocks for X-supported weights plus a trivial tail, Euclidean."""
    size = 2 * len(weights) + extra_trivial
    mats = []
    for i in range(l.dim):
        rows = [[Q(0)] * size for _ in range(size)]
        if i == 0:
            for t, w in enumerate(weights):
                rows[2 * t][2 * t + 1] = -Q(w)
                rows[2 * t + 1][2 * t] = Q(w)
        mats.append(Matrix(rows, size, size))
    return Representation(l, tuple(mats), form=SymmetricForm.euclidean(size),
                          module_dim=size)


def random_cochain(rng, cx, degree, scalar=False, bound=3):
    m = 1 if scalar else cx.module_dim
    count = len(lex_subsets(cx.n, degree)) * m
    return Cochain(cx.n, degree, m,
                   [Q(rng.randint(-bound, bound)) for _ in range(count)])


def random_cocycle(rng, cx, bound=3):
    """Random quadratic 2-cocycle: alpha from Z^2, gamma solved exactly."""
    h2 = cx.cohomology(2)
    alpha = cx.zero_cochain(2)
    for row in h2.cocycles.basis.data:
        c = Q(rng.randint(-bound, bound))
        alpha = alpha + Cochain(cx.n, 2, cx.module_dim,
                                [c * x for x in row])
    scalar = cx.scalar_complex()
    target = cx.wedge(alpha, alpha).scale(Q(1, 2))
    d3 = scalar.d_matrix(3)
    sol = d3.solve(target.coords)
    assert sol is not None, "square of a cocycle class must be exact here"
    gamma0 = Cochain(cx.n, 3, 1, sol)
    free = scalar.d_matrix(3).nullspace()
    gamma = gamma0
    for row in free.data:
        c = Q(rng.randint(-bound, bound))
        gamma = gamma + Cochain(cx.n, 3, 1, [c * x for x in row])
    return QuadraticCocycle(cx, alpha, gamma)
