"""Shared fixtures and hypothesis strategies."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import strategies as st

from acbgeom.algebra import FamilyParams, make_family_lee, make_lie_algebra, standard_structure
from acbgeom.analysis import geometry_for
from acbgeom.rational import Fraction, inverse, rarray, reye

small_rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)


@st.composite
def constrained_params(draw) -> FamilyParams:
    """Quadruples with theta1*omega2 == theta2*omega1, built proportionally.

    Either the theta pair is a multiple of the omega pair or vice versa, which
    together cover every solution of the constraint.
    """
    u = (draw(small_rationals), draw(small_rationals))
    lam = draw(small_rationals)
    if draw(st.booleans()):
        t1, t2, w1, w2 = lam * u[0], lam * u[1], u[0], u[1]
    else:
        t1, t2, w1, w2 = u[0], u[1], lam * u[0], lam * u[1]
    return FamilyParams(t1, t2, w1, w2)


@st.composite
def invertible_matrices(draw, n: int = 3) -> np.ndarray:
    """Unit-lower * diagonal * unit-upper with nonzero diagonal: invertible by construction."""
    ints = st.integers(-2, 2)
    lower, upper, diag = reye(n), reye(n), reye(n)
    for i in range(n):
        diag[i, i] = Fraction(draw(st.sampled_from([1, -1, 2, -2, Fraction(1, 2)])))
        for j in range(i):
            lower[i, j] = Fraction(draw(ints))
            upper[j, i] = Fraction(draw(ints))
    return lower.dot(diag).dot(upper)


def change_basis(C: np.ndarray, P: np.ndarray) -> np.ndarray:
    """Constants in the basis f_i = sum_a P[i, a] e_a."""
    Pinv = inverse(P)
    return np.einsum("ia,jb,abc,ck->ijk", P, P, C, Pinv)


@st.composite
def random_lie_algebras(draw):
    """Family algebras seen in a random basis: generic valid 3-dim Lie algebras."""
    p = draw(constrained_params())
    P = draw(invertible_matrices())
    C = change_basis(make_family_lee(p).C, P)
    return make_lie_algebra(3, C)


@pytest.fixture(scope="session")
def S():
    return standard_structure()


@pytest.fixture(scope="session")
def report_2_0_m1_0():
    return geometry_for(FamilyParams(2, 0, -1, 0))


def F(x) -> Fraction:
    return Fraction(x)


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import ACCEPTANCE_LINES

    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
