"""Connection, fundamental tensor and curvature of a left-invariant structure.

Everything is computed from structure constants in the fixed frame; for
left-invariant data all directional-derivative terms vanish, so the
Levi-Civita connection is the three-bracket Koszul form and covariant
derivatives reduce to contractions with the Christoffel array.

Index conventions (all arrays indexed in the frame e_0..e_{2n}):

* ``Gamma[i, j, l]`` -- e_l coefficient of nabla_{e_i} e_j
* ``F[i, j, k]``     -- F(e_i, e_j, e_k) = g((nabla_{e_i} phi) e_j, e_k)
* ``R[i, j, k, l]``  -- g(R(e_i, e_j) e_k, e_l)
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

import numpy as np

from . import kernels
from .algebra import ACBStructure, LieAlgebra
from .errors import DegeneratePair, DegeneratePlane, DimensionMismatch
from .rational import Fraction, is_zero, rank


@dataclass(frozen=True, eq=False)
class Connection:
    """A linear connection given by its constant frame coefficients."""

    Gamma: np.ndarray

    def covariant(self, i: int, vec) -> np.ndarray:
        """nabla_{e_i} of a constant-coefficient vector field."""
        return np.asarray(vec, dtype=self.Gamma.dtype).dot(self.Gamma[i])


@dataclass(frozen=True, eq=False)
class LeeForms:
    """The full contractions of F.

    Not to be confused with the component parameters theta1, theta2,
    omega1, omega2 of the F1/F11 normal forms: for the family,
    ``theta[1] == theta1 + omega1``.
    """

    theta: np.ndarray
    theta_star: np.ndarray
    omega: np.ndarray


@dataclass(frozen=True, eq=False)
class NormBundle:
    norm_nabla_phi: object
    norm_nabla_eta: object
    norm_nabla_xi: object


@dataclass(frozen=True, eq=False)
class CurvatureData:
    R: np.ndarray
    rho: np.ndarray
    rho_star: np.ndarray
    tau: object
    tau_star: object


class SectionType(str, Enum):
    TOTALLY_REAL = "totally_real"
    PHI_HOLOMORPHIC = "phi_holomorphic"
    XI_SECTION = "xi_section"
    GENERIC = "generic"


def _es(spec, *ops):
    # pairwise contraction order matters for object arrays: no BLAS, every product is a Python call
    return np.einsum(spec, *ops, optimize=len(ops) > 2)


def _check_compatible(L: LieAlgebra, S: ACBStructure) -> None:
    if L.dim != S.dim:
        raise DimensionMismatch(f"algebra has dim {L.dim}, structure has dim {S.dim}")


def levi_civita(L: LieAlgebra, S: ACBStructure) -> Connection:
    _check_compatible(L, S)
    C = L.C if L.C.dtype == S.g.dtype else L.C.astype(S.g.dtype)
    return Connection(kernels.koszul(C, S.g, S.g_inv))


def nabla_phi(conn: Connection, S: ACBStructure) -> np.ndarray:
    """``N[i, j, l]``: e_l coefficient of (nabla_{e_i} phi) e_j."""
    return kernels.nabla_endomorphism(conn.Gamma, S.phi)


def nabla_xi(conn: Connection, S: ACBStructure) -> np.ndarray:
    """Row i is nabla_{e_i} xi."""
    return _es("a,ial->il", S.xi, conn.Gamma)


def nabla_eta(conn: Connection, S: ACBStructure) -> np.ndarray:
    """``[i, k]`` = (nabla_{e_i} eta)(e_k) = -eta(nabla_{e_i} e_k)."""
    return -_es("ikl,l->ik", conn.Gamma, S.eta)


def fundamental_tensor(L: LieAlgebra, S: ACBStructure, conn: Connection) -> np.ndarray:
    """F(e_i, e_j, e_k) = g((nabla_{e_i} phi) e_j, e_k) from the connection."""
    _check_compatible(L, S)
    return _es("ijl,lk->ijk", nabla_phi(conn, S), S.g)


def fundamental_tensor_from_brackets(L: LieAlgebra, S: ACBStructure) -> np.ndarray:
    """F from brackets alone, bypassing the connection.

    2F_ijk = g([e_i, phi e_j] - phi[e_i, e_j], e_k)
           + g(phi[e_k, e_i] - [phi e_k, e_i], e_j)
           + g([e_k, phi e_j] - [phi e_k, e_j], e_i)

    Independent of :func:`fundamental_tensor`; the two are cross-checked.
    """
    _check_compatible(L, S)
    C = L.C if L.C.dtype == S.g.dtype else L.C.astype(S.g.dtype)
    phi, g = S.phi, S.g
    x_phi_y = _es("bj,ibm->ijm", phi, C)      # [e_i, phi e_j]
    phi_xy = _es("ijm,am->ija", C, phi)       # phi [e_i, e_j]
    phi_x_y = _es("bk,bim->kim", phi, C)      # [phi e_k, e_i]
    t1 = _es("ijm,mk->ijk", x_phi_y - phi_xy, g)
    t2 = _es("kim,mj->ijk", phi_xy - phi_x_y, g)
    t3 = _es("kjm,mi->ijk", x_phi_y - phi_x_y, g)
    return (t1 + t2 + t3) / 2


def lee_forms(F: np.ndarray, S: ACBStructure) -> LeeForms:
    theta = _es("ij,ijz->z", S.g_inv, F)
    f_phi = _es("aj,iaz->ijz", S.phi, F)  # F(e_i, phi e_j, e_z)
    theta_star = _es("ij,ijz->z", S.g_inv, f_phi)
    omega = _es("a,b,abz->z", S.xi, S.xi, F)
    return LeeForms(theta, theta_star, omega)


def square_norms(S: ACBStructure, conn: Connection) -> NormBundle:
    gi, g = S.g_inv, S.g
    N = nabla_phi(conn, S)
    # g^{ij} g^{ks} g(N_ik, N_js)
    lowered = _es("jsm,lm->jsl", N, g)
    raised = _es("ij,ks,jsl->ikl", gi, gi, lowered)
    n_phi = _es("ikl,ikl->", N, raised)
    E = nabla_eta(conn, S)
    n_eta = _es("ij,ks,ik,js->", gi, gi, E, E)
    X = nabla_xi(conn, S)
    n_xi = _es("ij,il,jm,lm->", gi, X, X, g)
    return NormBundle(n_phi, n_eta, n_xi)


def curvature(L: LieAlgebra, conn: Connection, S: ACBStructure) -> CurvatureData:
    _check_compatible(L, S)
    C = L.C if L.C.dtype == S.g.dtype else L.C.astype(S.g.dtype)
    R = kernels.riemann(C, conn.Gamma, S.g)
    rho = _es("ij,iabj->ab", S.g_inv, R)
    # R(e_i, x, y, phi e_j) = phi[c, j] R[i, x, y, c]
    rho_star = _es("ij,cj,iabc->ab", S.g_inv, S.phi, R)
    tau = _es("ab,ab->", S.g_inv, rho)
    tau_star = _es("ab,ab->", S.g_inv, rho_star)
    return CurvatureData(R, rho, rho_star, tau, tau_star)


def ricci_frame_forms(R: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Dimension-3 shortcut forms written out for g = diag(1, 1, -1):

    rho_jk = R_0jk0 + R_1jk1 - R_2jk2 and rho*_jk = R_1kj2 + R_2jk1.
    """
    if R.shape != (3, 3, 3, 3):
        raise DimensionMismatch("frame forms are written for dimension 3")
    rho = R[0, :, :, 0] + R[1, :, :, 1] - R[2, :, :, 2]
    rho_star = np.transpose(R[1, :, :, 2]) + R[2, :, :, 1]
    return rho, rho_star


def sectional_curvature(curv: CurvatureData, S: ACBStructure, x, y, tol: float = 0.0):
    x = np.asarray(x, dtype=S.g.dtype)
    y = np.asarray(y, dtype=S.g.dtype)
    denom = S.metric(x, x) * S.metric(y, y) - S.metric(x, y) ** 2
    if abs(denom) <= tol:
        raise DegeneratePlane("g(x,x)g(y,y) - g(x,y)^2 vanishes")
    num = _es("a,b,c,d,abcd->", x, y, y, x, curv.R)
    return num / denom


def unit_vector(S: ACBStructure, i: int) -> np.ndarray:
    v = np.zeros(S.dim, dtype=S.g.dtype)
    if S.exact:
        v[:] = Fraction(0)
        v[i] = Fraction(1)
    else:
        v[i] = 1.0
    return v


def basic_sectional_curvatures(curv: CurvatureData, S: ACBStructure, tol: float = 0.0) -> dict:
    """k_ij of the coordinate planes span{e_i, e_j}, i < j; degenerate planes are skipped."""
    out = {}
    for i, j in combinations(range(S.dim), 2):
        try:
            out[(i, j)] = sectional_curvature(curv, S, unit_vector(S, i), unit_vector(S, j), tol)
        except DegeneratePlane:
            continue
    return out


def section_type(S: ACBStructure, x, y) -> SectionType:
    x = np.asarray(x, dtype=S.g.dtype)
    y = np.asarray(y, dtype=S.g.dtype)
    if rank([x, y]) < 2:
        raise DegeneratePair("x and y are linearly dependent")
    px, py = S.apply_phi(x), S.apply_phi(y)
    if rank([px, py]) == 2 and rank([x, y, px, py]) == 2:
        return SectionType.PHI_HOLOMORPHIC
    if rank([x, y, S.xi]) == 2:
        return SectionType.XI_SECTION
    ortho = all(S.metric(u, v) == 0 for u in (x, y) for v in (px, py, S.xi))
    if ortho:
        return SectionType.TOTALLY_REAL
    return SectionType.GENERIC


def phiB_connection(conn: Connection, S: ACBStructure) -> Connection:
    """D_x y = nabla_x y + 1/2 {(nabla_x phi) phi y + (nabla_x eta)(y) xi} - eta(y) nabla_x xi."""
    N = nabla_phi(conn, S)
    term_phi = _es("aj,ial->ijl", S.phi, N)           # (nabla_i phi)(phi e_j)
    term_eta = _es("ij,l->ijl", nabla_eta(conn, S), S.xi)
    term_xi = _es("j,il->ijl", S.eta, nabla_xi(conn, S))
    return Connection(conn.Gamma + (term_phi + term_eta) / 2 - term_xi)


def structure_derivatives(D: Connection, S: ACBStructure) -> dict[str, np.ndarray]:
    """Covariant derivatives of phi, xi, eta, g and g~ under an arbitrary connection.

    All vanish exactly when ``D`` is natural.
    """
    G = D.Gamma

    def metric_derivative(h):
        # (D_i h)(e_j, e_k) = -h(D_i e_j, e_k) - h(e_j, D_i e_k)
        a = _es("ijl,lk->ijk", G, h)
        return -a - _es("ijk->ikj", a)

    return {
        "phi": kernels.nabla_endomorphism(G, S.phi),
        "xi": _es("a,ial->il", S.xi, G),
        "eta": -_es("ikl,l->ik", G, S.eta),
        "g": metric_derivative(S.g),
        "g_tilde": metric_derivative(S.g_tilde),
    }


def connection_torsion(D: Connection, L: LieAlgebra, S: ACBStructure) -> np.ndarray:
    """T[i, j, k] = g(D_{e_i} e_j - D_{e_j} e_i - [e_i, e_j], e_k)."""
    _check_compatible(L, S)
    G = D.Gamma
    C = L.C if L.C.dtype == G.dtype else L.C.astype(G.dtype)
    return _es("ijl,lk->ijk", G - _es("jil->ijl", G) - C, S.g)


def phi_canonical_defect(T: np.ndarray, S: ACBStructure) -> np.ndarray:
    """Left side minus right side of the phi-canonical torsion identity on basis triples."""
    phi, xi, eta = S.phi, S.xi, S.eta
    t_pp = _es("ibc,bj,ck->ijk", T, phi, phi)  # T(e_i, phi e_j, phi e_k)
    A = T - _es("ikj->ijk", T) - t_pp + _es("ikj->ijk", t_pp)
    a_xi = _es("a,ajk->jk", xi, A)
    t_x1 = _es("iak,a->ik", T, xi)             # T(e_i, xi, e_k)
    t_x2 = _es("ika,a->ik", T, xi)             # T(e_i, e_k, xi)
    t_xx = _es("kab,a,b->k", T, xi, xi)        # T(e_k, xi, xi)
    B = t_x1 - t_x2 - _es("i,k->ik", eta, t_xx)
    rhs = (
        _es("i,jk->ijk", eta, a_xi)
        + _es("j,ik->ijk", eta, B)
        - _es("k,ij->ijk", eta, B)
    )
    return A - rhs


@dataclass(frozen=True, eq=False)
class GeometryReport:
    """Every tensor the engine derives from one (algebra, structure) pair."""

    algebra: LieAlgebra
    structure: ACBStructure
    connection: Connection
    F: np.ndarray
    F_brackets: np.ndarray
    lee: LeeForms
    norms: NormBundle
    curvature: CurvatureData
    sectional: dict
    phiB: Connection
    phiB_torsion: np.ndarray

    @property
    def exact(self) -> bool:
        return self.structure.exact


def compute_geometry(L: LieAlgebra, S: ACBStructure) -> GeometryReport:
    conn = levi_civita(L, S)
    F = fundamental_tensor(L, S, conn)
    curv = curvature(L, conn, S)
    D = phiB_connection(conn, S)
    return GeometryReport(
        algebra=L,
        structure=S,
        connection=conn,
        F=F,
        F_brackets=fundamental_tensor_from_brackets(L, S),
        lee=lee_forms(F, S),
        norms=square_norms(S, conn),
        curvature=curv,
        sectional=basic_sectional_curvatures(curv, S),
        phiB=D,
        phiB_torsion=connection_torsion(D, L, S),
    )


def connection_is_zero(D: Connection, tol: float = 0.0) -> bool:
    return is_zero(D.Gamma, tol)
