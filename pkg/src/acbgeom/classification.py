"""Membership of a 3-dimensional F in F0, F1, F11 and F1 + F11.

The F1 and F11 normal forms are

    F1(x, y, z)  = (x^1 theta1 - x^2 theta2)(y^1 z^1 + y^2 z^2)
    F11(x, y, z) = x^0 {(y^1 z^0 + y^0 z^1) omega1 + (y^2 z^0 + y^0 z^2) omega2}

with the component parameters read off F itself.  Other basic classes
reachable in dimension 3 are only detected negatively, through a nonzero
residual F - F1 - F11.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch
from .rational import Fraction, is_zero, max_abs


@dataclass(frozen=True)
class ComponentParams:
    theta1: object
    theta2: object
    omega1: object
    omega2: object
    # the paired entries of F that must agree for F to lie in F1 + F11
    consistent: bool

    def as_tuple(self):
        return (self.theta1, self.theta2, self.omega1, self.omega2)


@dataclass(frozen=True)
class ClassFlags:
    inF0: bool
    inF1: bool
    inF11: bool
    inF1plusF11: bool
    residual_max_abs: object


def _require_dim3(F: np.ndarray) -> None:
    if F.shape != (3, 3, 3):
        raise DimensionMismatch("classification is defined for dimension 3 only")


def component_params(F: np.ndarray, tol: float = 0.0) -> ComponentParams:
    _require_dim3(F)
    t1, t2 = F[1, 1, 1], -F[2, 1, 1]
    w1, w2 = F[0, 1, 0], F[0, 2, 0]
    pairs = [
        (F[1, 1, 1], F[1, 2, 2]),
        (F[2, 1, 1], F[2, 2, 2]),
        (F[0, 1, 0], F[0, 0, 1]),
        (F[0, 2, 0], F[0, 0, 2]),
    ]
    consistent = all(bool(abs(a - b) <= tol) for a, b in pairs)
    return ComponentParams(t1, t2, w1, w2, consistent)


def f1_form(theta1, theta2, like: np.ndarray) -> np.ndarray:
    out = np.zeros((3, 3, 3), dtype=like.dtype)
    if like.dtype == object:
        out[...] = Fraction(0)
    # x^1 theta1 - x^2 theta2 paired with y^1 z^1 + y^2 z^2
    for x, coeff in ((1, theta1), (2, -theta2)):
        out[x, 1, 1] = coeff
        out[x, 2, 2] = coeff
    return out


def f11_form(omega1, omega2, like: np.ndarray) -> np.ndarray:
    out = np.zeros((3, 3, 3), dtype=like.dtype)
    if like.dtype == object:
        out[...] = Fraction(0)
    out[0, 1, 0] = out[0, 0, 1] = omega1
    out[0, 2, 0] = out[0, 0, 2] = omega2
    return out


def project_components(F: np.ndarray, tol: float = 0.0):
    """Return (F1 part, F11 part, component params) built from entries of F."""
    params = component_params(F, tol)
    return (
        f1_form(params.theta1, params.theta2, F),
        f11_form(params.omega1, params.omega2, F),
        params,
    )


def decomposition_residual(F: np.ndarray) -> np.ndarray:
    f1, f11, _ = project_components(F)
    return F - f1 - f11


def class_flags(F: np.ndarray, tol: float = 0.0) -> ClassFlags:
    resid = decomposition_residual(F)
    params = component_params(F, tol)
    in_sum = is_zero(resid, tol)
    t1, t2, w1, w2 = params.as_tuple()
    return ClassFlags(
        inF0=is_zero(F, tol),
        inF1=bool(in_sum and abs(w1) <= tol and abs(w2) <= tol),
        inF11=bool(in_sum and abs(t1) <= tol and abs(t2) <= tol),
        inF1plusF11=in_sum,
        residual_max_abs=max_abs(resid),
    )
