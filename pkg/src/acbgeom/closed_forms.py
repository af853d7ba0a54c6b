"""Published closed-form component tables of the three-parameter family.

These are transcriptions of the component lists for the family, written in
the Lee-component parameters.  They are used as an oracle against the
first-principles pipeline and never feed back into it.
"""

from __future__ import annotations

import numpy as np

from .algebra import FamilyParams
from .rational import Fraction, rzeros


def christoffel(p: FamilyParams) -> np.ndarray:
    t1, t2, w1, w2 = p.as_tuple()
    G = rzeros((3, 3, 3))
    G[0, 0, 1], G[0, 0, 2] = w2, w1
    G[0, 1, 0] = -w2
    G[0, 2, 0] = w1
    G[1, 1, 2] = t1 / 2
    G[1, 2, 1] = t1 / 2
    G[2, 1, 2] = -t2 / 2
    G[2, 2, 1] = -t2 / 2
    return G


def fundamental(p: FamilyParams) -> np.ndarray:
    t1, t2, w1, w2 = p.as_tuple()
    F = rzeros((3, 3, 3))
    F[0, 0, 1] = F[0, 1, 0] = w1
    F[0, 0, 2] = F[0, 2, 0] = w2
    F[1, 1, 1] = F[1, 2, 2] = t1
    F[2, 1, 1] = F[2, 2, 2] = -t2
    return F


def _fill_riemann(values: dict[tuple[int, int, int, int], Fraction]) -> np.ndarray:
    R = rzeros((3, 3, 3, 3))
    for (i, j, k, l), v in values.items():
        for a, b, c, d, s in (
            (i, j, k, l, 1), (j, i, k, l, -1), (i, j, l, k, -1), (j, i, l, k, 1),
        ):
            R[a, b, c, d] = s * v
            R[c, d, a, b] = s * v
    return R


def riemann(p: FamilyParams) -> np.ndarray:
    """Full (0,4) tensor from the listed components and the curvature symmetries.

    Components not reachable from the list (R_0112, R_0212 and their images)
    are zero.
    """
    t1, t2, w1, w2 = p.as_tuple()
    return _fill_riemann({
        (0, 1, 1, 0): t1 * w1 / 2 - w2 ** 2,
        (0, 2, 2, 0): -w1 ** 2 + t2 * w2 / 2,
        (0, 1, 2, 0): (w1 - t1 / 2) * w2,
        (1, 2, 2, 1): -(t1 ** 2 - t2 ** 2) / 4,
    })


def ricci(p: FamilyParams) -> np.ndarray:
    t1, t2, w1, w2 = p.as_tuple()
    rho = rzeros((3, 3))
    rho[0, 0] = (t1 * w1 - t2 * w2) / 2 + (w1 ** 2 - w2 ** 2)
    rho[1, 1] = (t1 ** 2 - t2 ** 2) / 4 + t1 * w1 / 2 - w2 ** 2
    rho[2, 2] = -(t1 ** 2 - t2 ** 2) / 4 + t2 * w2 / 2 - w1 ** 2
    rho[1, 2] = rho[2, 1] = (w1 - t1 / 2) * w2
    return rho


def ricci_star(p: FamilyParams) -> np.ndarray:
    t1, t2, w1, w2 = p.as_tuple()
    rs = rzeros((3, 3))
    rs[0, 0] = 2 * (w1 - t1 / 2) * w2
    rs[1, 2] = rs[2, 1] = (t1 ** 2 - t2 ** 2) / 4
    return rs


def scalar_curvature(p: FamilyParams) -> Fraction:
    t1, t2, w1, w2 = p.as_tuple()
    return (t1 ** 2 - t2 ** 2) / 2 + (t1 * w1 - t2 * w2) + 2 * (w1 ** 2 - w2 ** 2)


def star_scalar_curvature(p: FamilyParams) -> Fraction:
    t1, t2, w1, w2 = p.as_tuple()
    return 2 * (w1 - t1 / 2) * w2


def sectional(p: FamilyParams) -> dict[tuple[int, int], Fraction]:
    t1, t2, w1, w2 = p.as_tuple()
    return {
        (0, 1): t1 * w1 / 2 - w2 ** 2,
        (0, 2): w1 ** 2 - t2 * w2 / 2,
        (1, 2): (t1 ** 2 - t2 ** 2) / 4,
    }


def norm_nabla_phi(p: FamilyParams) -> Fraction:
    t1, t2, w1, w2 = p.as_tuple()
    return 2 * (t1 ** 2 - t2 ** 2 + w1 ** 2 - w2 ** 2)


def norm_nabla_eta(p: FamilyParams) -> Fraction:
    _, _, w1, w2 = p.as_tuple()
    return -(w1 ** 2 - w2 ** 2)


norm_nabla_xi = norm_nabla_eta
