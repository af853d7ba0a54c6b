"""Lie algebras in a fixed frame and almost contact B-metric structures on them.

Frame convention used throughout the package: index 0 is the Reeb
direction (xi = e_0) and indices 1..2n span the contact distribution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from . import kernels
from .errors import (
    AntisymmetryViolation,
    ConstraintViolation,
    DimensionMismatch,
    JacobiViolation,
    SingularMetric,
)
from .rational import Fraction, inverse, max_abs, rarray, reye, rzeros, signature, to_fraction


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, copy=True)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """Structure constants ``C[i, j, k]`` = e_k coefficient of [e_i, e_j]."""

    dim: int
    C: np.ndarray
    validated: bool = False

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and bool(np.all(self.C == other.C))

    __hash__ = None

    @property
    def exact(self) -> bool:
        return self.C.dtype == object

    def to_float(self) -> "LieAlgebra":
        return LieAlgebra(self.dim, _frozen(self.C.astype(np.float64)), self.validated)


@dataclass(frozen=True)
class FamilyParams:
    """Lee-component parameters (theta1, theta2, omega1, omega2) of the family."""

    theta1: Fraction
    theta2: Fraction
    omega1: Fraction
    omega2: Fraction

    def __post_init__(self):
        for name in ("theta1", "theta2", "omega1", "omega2"):
            object.__setattr__(self, name, to_fraction(getattr(self, name)))

    @classmethod
    def from_abcd(cls, a, b, c, d) -> "FamilyParams":
        a, b, c, d = (to_fraction(v) for v in (a, b, c, d))
        return cls(2 * a, 2 * b, c, d)

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.theta1, self.theta2, self.omega1, self.omega2)

    def as_abcd(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.theta1 / 2, self.theta2 / 2, self.omega1, self.omega2)

    @property
    def constraint_defect(self) -> Fraction:
        return self.theta1 * self.omega2 - self.theta2 * self.omega1

    def satisfies_constraint(self) -> bool:
        return self.constraint_defect == 0


def make_lie_algebra(dim: int, constants) -> LieAlgebra:
    """Wrap a dim^3 array of structure constants, checking antisymmetry."""
    C = rarray(constants)
    if C.shape != (dim, dim, dim):
        raise DimensionMismatch(f"constants must have shape {(dim,) * 3}, got {C.shape}")
    for i, j, k in product(range(dim), repeat=3):
        if C[i, j, k] != -C[j, i, k]:
            raise AntisymmetryViolation(
                f"C[{i}][{j}][{k}] = {C[i, j, k]} but C[{j}][{i}][{k}] = {C[j, i, k]}"
            )
    return LieAlgebra(dim, _frozen(C))


def bracket(L: LieAlgebra, x, y) -> np.ndarray:
    """[x, y] = sum_ij x^i y^j C[i, j, :]."""
    x = np.asarray(x, dtype=L.C.dtype)
    y = np.asarray(y, dtype=L.C.dtype)
    if x.shape != (L.dim,) or y.shape != (L.dim,):
        raise DimensionMismatch(f"vectors must have length {L.dim}")
    return np.einsum("i,j,ijk->k", x, y, L.C)


def jacobi_defect(L: LieAlgebra) -> np.ndarray:
    """``D[i, j, k, m]``: e_m coefficient of the cyclic sum on (e_i, e_j, e_k)."""
    return kernels.jacobi(L.C)


def is_lie_algebra(L: LieAlgebra) -> bool:
    return all(v == 0 for v in jacobi_defect(L).reshape(-1))


def _family_constants(a, b, c, d) -> np.ndarray:
    C = rzeros((3, 3, 3))
    C[0, 1, 0], C[1, 0, 0] = -d, d
    C[0, 2, 0], C[2, 0, 0] = c, -c
    C[1, 2, 1], C[2, 1, 1] = a, -a
    C[1, 2, 2], C[2, 1, 2] = b, -b
    return C


def make_family(a, b, c, d) -> LieAlgebra:
    """[e0,e1] = -d e0, [e0,e2] = c e0, [e1,e2] = a e1 + b e2, requiring ad = bc."""
    a, b, c, d = (to_fraction(v) for v in (a, b, c, d))
    defect = a * d - b * c
    if defect != 0:
        raise JacobiViolation(f"Jacobi violated: ad-bc = {defect}")
    return LieAlgebra(3, _frozen(_family_constants(a, b, c, d)), validated=True)


def make_family_lee(p: FamilyParams) -> LieAlgebra:
    """Family member in Lee-component form; same algebra as make_family(t1/2, t2/2, w1, w2)."""
    if not p.satisfies_constraint():
        raise ConstraintViolation(
            f"Jacobi violated: theta1*omega2-theta2*omega1 = {p.constraint_defect}"
        )
    return LieAlgebra(3, _frozen(_family_constants(*p.as_abcd())), validated=True)


@dataclass(frozen=True, eq=False)
class ACBStructure:
    """Component arrays of (phi, xi, eta, g) plus the derived g-tilde and g^-1.

    ``phi[a, b]`` is the e_a coefficient of phi(e_b).
    """

    phi: np.ndarray
    xi: np.ndarray
    eta: np.ndarray
    g: np.ndarray
    g_tilde: np.ndarray = field(repr=False)
    g_inv: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return self.g.shape[0]

    @property
    def exact(self) -> bool:
        return self.g.dtype == object

    def apply_phi(self, x) -> np.ndarray:
        return self.phi.dot(np.asarray(x, dtype=self.phi.dtype))

    def metric(self, x, y):
        x = np.asarray(x, dtype=self.g.dtype)
        y = np.asarray(y, dtype=self.g.dtype)
        return x.dot(self.g).dot(y)

    def to_float(self) -> "ACBStructure":
        conv = lambda a: _frozen(a.astype(np.float64))  # noqa: E731
        return ACBStructure(*(conv(a) for a in (self.phi, self.xi, self.eta, self.g, self.g_tilde, self.g_inv)))


def associated_metric(phi, eta, g) -> np.ndarray:
    """g~(x, y) = g(x, phi y) + eta(x) eta(y)."""
    return g.dot(phi) + np.outer(eta, eta)


def make_structure(phi, xi, eta, g) -> ACBStructure:
    """Build a structure from exact components; g must be invertible.

    Axioms are not enforced here, see :func:`check_structure_axioms`.
    """
    phi, xi, eta, g = rarray(phi), rarray(xi), rarray(eta), rarray(g)
    n = g.shape[0]
    if phi.shape != (n, n) or xi.shape != (n,) or eta.shape != (n,) or g.shape != (n, n):
        raise DimensionMismatch("phi, g must be n x n and xi, eta length n")
    try:
        g_inv = inverse(g)
    except ZeroDivisionError as exc:
        raise SingularMetric("metric is degenerate") from exc
    g_tilde = associated_metric(phi, eta, g)
    return ACBStructure(*(_frozen(a) for a in (phi, xi, eta, g, g_tilde, g_inv)))


def standard_structure() -> ACBStructure:
    """phi e0 = 0, phi e1 = e2, phi e2 = -e1, xi = e0, eta = e^0, g = diag(1, 1, -1)."""
    phi = rzeros((3, 3))
    phi[2, 1] = Fraction(1)
    phi[1, 2] = Fraction(-1)
    g = reye(3)
    g[2, 2] = Fraction(-1)
    return make_structure(phi, [1, 0, 0], [1, 0, 0], g)


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    holds: bool
    residual: Fraction


def check_structure_axioms(S: ACBStructure) -> dict[str, AxiomCheck]:
    """Evaluate each structure axiom; residuals are max |entry| of the defect."""
    n = S.dim
    phi, xi, eta, g = S.phi, S.xi, S.eta, S.g
    defects = {
        "phi_xi": phi.dot(xi),
        "phi_squared": phi.dot(phi) + reye(n) - np.outer(xi, eta),
        "eta_phi": eta.dot(phi),
        "eta_xi": np.array([eta.dot(xi) - 1], dtype=object),
        "b_metric": phi.T.dot(g).dot(phi) + g - np.outer(eta, eta),
        "g_symmetric": g - g.T,
        "g_tilde_symmetric": S.g_tilde - S.g_tilde.T,
        "g_inverse": g.dot(S.g_inv) - reye(n),
    }
    report = {}
    for name, arr in defects.items():
        r = max_abs(arr)
        report[name] = AxiomCheck(name, r == 0, r)
    if report["g_symmetric"].holds and n % 2 == 1:
        half = n // 2
        pos, neg, zero = signature(g)
        ok = (pos, neg, zero) == (half + 1, half, 0)
        resid = Fraction(abs(pos - (half + 1)) + abs(neg - half) + zero)
    else:
        ok, resid = False, Fraction(1)
    report["signature"] = AxiomCheck("signature", ok, resid)
    return report


def axioms_hold(S: ACBStructure) -> bool:
    return all(c.holds for c in check_structure_axioms(S).values())


def basis(n: int, i: int) -> np.ndarray:
    v = rzeros(n)
    v[i] = Fraction(1)
    return v
