"""Compiled and pure-Python kernels agree on exact and float inputs."""

import importlib
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings

from acbgeom import _pykernels, kernels
from acbgeom.algebra import standard_structure

from .conftest import random_lie_algebras

try:
    from acbgeom import _ckernels
except ImportError:  # pragma: no cover - extension not built
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled extension not built")


def _pipeline(mod, C, S):
    G = mod.koszul(C, S.g, S.g_inv)
    return G, mod.riemann(C, G, S.g), mod.nabla_endomorphism(G, S.phi), mod.jacobi(C)


def test_backend_is_reported():
    assert kernels.BACKEND in ("cython", "python")


@needs_ext
@settings(max_examples=40, deadline=None)
@given(random_lie_algebras())
def test_exact_parity(L):
    S = standard_structure()
    for a, b in zip(_pipeline(_pykernels, L.C, S), _pipeline(_ckernels, L.C, S)):
        assert a.dtype == b.dtype == object
        assert (a == b).all()


@needs_ext
@settings(max_examples=40, deadline=None)
@given(random_lie_algebras())
def test_float_parity(L):
    S = standard_structure().to_float()
    C = L.to_float().C
    for a, b in zip(_pipeline(_pykernels, C, S), _pipeline(_ckernels, C, S)):
        assert b.dtype == np.float64
        # summation order differs between backends; cancellations leave O(eps * scale) noise
        scale = max(1.0, float(np.max(np.abs(a))))
        np.testing.assert_allclose(a, b, rtol=1e-12, atol=1e-12 * scale)


def test_environment_variable_forces_pure_backend():
    env = dict(os.environ, ACBGEOM_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import acbgeom; print(acbgeom.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
