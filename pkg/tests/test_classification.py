import numpy as np
import pytest
from hypothesis import given

from acbgeom.algebra import FamilyParams, make_family, standard_structure
from acbgeom.analysis import geometry_for
from acbgeom.classification import (
    class_flags,
    component_params,
    decomposition_residual,
    project_components,
)
from acbgeom.errors import DimensionMismatch
from acbgeom.rational import rzeros
from acbgeom.tensors import compute_geometry

from .conftest import constrained_params


def F_of(*p):
    return geometry_for(FamilyParams(*p)).F


def test_component_params_from_abcd_family():
    F = compute_geometry(make_family(1, 2, 2, 4), standard_structure()).F
    cp = component_params(F)
    assert cp.as_tuple() == (2, 4, 2, 4) and cp.consistent


def test_zero_tensor():
    Z = rzeros((3, 3, 3))
    f1, f11, cp = project_components(Z)
    assert (f1 == 0).all() and (f11 == 0).all() and cp.as_tuple() == (0, 0, 0, 0)
    assert (decomposition_residual(Z) == 0).all()


def test_projection_example():
    f1, f11, _ = project_components(F_of(2, 0, -1, 0))
    def nz(A):
        return {idx: A[idx] for idx in np.ndindex(A.shape) if A[idx] != 0}

    assert nz(f1) == {(1, 1, 1): 2, (1, 2, 2): 2}
    assert nz(f11) == {(0, 0, 1): -1, (0, 1, 0): -1}


@given(constrained_params())
def test_family_residual_vanishes(p):
    assert (decomposition_residual(geometry_for(p).F) == 0).all()


@given(constrained_params())
def test_projection_idempotent(p):
    f1, f11, cp = project_components(geometry_for(p).F)
    g1, g11, cp2 = project_components(f1 + f11)
    assert (g1 == f1).all() and (g11 == f11).all() and cp2.as_tuple() == cp.as_tuple()


def test_off_support_entry_gives_residual():
    F = F_of(2, 0, -1, 0).copy()
    F[0, 1, 2] = F[0, 2, 1] = 1
    assert not (decomposition_residual(F) == 0).all()
    flags = class_flags(F)
    assert not flags.inF1plusF11 and flags.residual_max_abs == 1


@pytest.mark.parametrize("p, expected", [
    ((2, 0, 0, 0), dict(inF0=False, inF1=True, inF11=False, inF1plusF11=True)),
    ((0, 0, -1, 0), dict(inF0=False, inF1=False, inF11=True, inF1plusF11=True)),
    ((0, 0, 0, 0), dict(inF0=True, inF1=True, inF11=True, inF1plusF11=True)),
    ((2, 4, 2, 4), dict(inF0=False, inF1=False, inF11=False, inF1plusF11=True)),
])
def test_class_flags(p, expected):
    flags = class_flags(F_of(*p))
    assert {k: getattr(flags, k) for k in expected} == expected
    assert all(type(getattr(flags, k)) is bool for k in expected)


def test_non_dim3_rejected():
    with pytest.raises(DimensionMismatch):
        component_params(rzeros((5, 5, 5)))
