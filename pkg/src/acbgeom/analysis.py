"""Geometric predicates, proposition verification and rational grid sweeps.

Predicates are always computed from the tensors produced by the full
pipeline; the parameter conditions quoted for the family are evaluated
separately and the two sides are compared, never assumed equal.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

import numpy as np

from .algebra import FamilyParams, basis, bracket, make_family_lee, standard_structure
from .classification import ClassFlags, class_flags, component_params
from .errors import ConstraintViolation, EmptyGrid
from .rational import Fraction, format_rational, is_zero, to_fraction
from .tensors import (
    GeometryReport,
    compute_geometry,
    connection_is_zero,
    nabla_xi,
)

FLOAT_TOL = 1e-9


@lru_cache(maxsize=None)
def _standard(mode: str):
    S = standard_structure()
    return S if mode == "exact" else S.to_float()


def _tol(mode: str) -> float:
    return 0.0 if mode == "exact" else FLOAT_TOL


def _zero(x, tol: float) -> bool:
    return bool(abs(x) <= tol)


# ---------------------------------------------------------------- predicates


@dataclass(frozen=True)
class PredicateVector:
    is_flat: bool
    is_ricci_flat: bool
    is_star_ricci_flat: bool
    is_scalar_flat: bool
    is_star_scalar_flat: bool
    is_isotropic_f0: bool
    is_star_einstein: bool
    duals_isotropic: bool
    alpha: object = None

    def as_dict(self) -> dict:
        return {
            "isFlat": self.is_flat,
            "isRicciFlat": self.is_ricci_flat,
            "isStarRicciFlat": self.is_star_ricci_flat,
            "isScalarFlat": self.is_scalar_flat,
            "isStarScalarFlat": self.is_star_scalar_flat,
            "isIsotropicF0": self.is_isotropic_f0,
            "isStarEinstein": self.is_star_einstein,
            "dualsIsotropic": self.duals_isotropic,
        }


def star_einstein_constant(report: GeometryReport, tol: float = 0.0):
    """The alpha with rho = alpha g~ on the contact distribution, or None.

    Only horizontal pairs (indices 1..2n) are constrained; rho(xi, .) is free.
    """
    S, rho = report.structure, report.curvature.rho
    horizontal = range(1, S.dim)
    pairs = [(i, j) for i in horizontal for j in horizontal]
    anchor = next(((i, j) for i, j in pairs if not _zero(S.g_tilde[i, j], tol)), None)
    if anchor is None:
        return None
    alpha = rho[anchor] / S.g_tilde[anchor]
    if all(_zero(rho[i, j] - alpha * S.g_tilde[i, j], tol) for i, j in pairs):
        return alpha
    return None


def dual_vector_norms(report: GeometryReport, tol: float = 0.0) -> dict[str, object]:
    """g(Theta, Theta), g(Omega, Omega) and g(nabla_xi xi, nabla_xi xi).

    Theta and Omega are the g-raisings of the component covectors
    (0, theta1, theta2) and (0, omega1, omega2).
    """
    S = report.structure
    cp = component_params(report.F, tol)
    zero = report.F.flat[0] * 0
    theta = np.array([zero, cp.theta1, cp.theta2], dtype=report.F.dtype)
    omega = np.array([zero, cp.omega1, cp.omega2], dtype=report.F.dtype)
    Theta, Omega = S.g_inv.dot(theta), S.g_inv.dot(omega)
    xi_index = int(np.nonzero(S.xi)[0][0])
    nxx = nabla_xi(report.connection, S)[xi_index]
    return {
        "Theta": S.metric(Theta, Theta),
        "Omega": S.metric(Omega, Omega),
        "nabla_xi_xi": S.metric(nxx, nxx),
    }


def predicates_from_report(report: GeometryReport, tol: float = 0.0) -> PredicateVector:
    c = report.curvature
    alpha = star_einstein_constant(report, tol)
    duals = dual_vector_norms(report, tol)
    return PredicateVector(
        is_flat=is_zero(c.R, tol),
        is_ricci_flat=is_zero(c.rho, tol),
        is_star_ricci_flat=is_zero(c.rho_star, tol),
        is_scalar_flat=_zero(c.tau, tol),
        is_star_scalar_flat=_zero(c.tau_star, tol),
        is_isotropic_f0=_zero(report.norms.norm_nabla_phi, tol),
        is_star_einstein=alpha is not None,
        duals_isotropic=all(_zero(v, tol) for v in duals.values()),
        alpha=alpha,
    )


def geometry_for(p: FamilyParams, mode: str = "exact") -> GeometryReport:
    if not p.satisfies_constraint():
        raise ConstraintViolation(
            f"Jacobi violated: theta1*omega2-theta2*omega1 = {p.constraint_defect}"
        )
    L = make_family_lee(p)
    if mode == "float":
        L = L.to_float()
    return compute_geometry(L, _standard(mode))


@lru_cache(maxsize=8192)
def _shared_geometry(p: FamilyParams) -> GeometryReport:
    """Exact reports reused across the proposition verifiers; treated as read-only."""
    return geometry_for(p)


def predicates(p: FamilyParams, mode: str = "exact") -> PredicateVector:
    return predicates_from_report(geometry_for(p, mode), _tol(mode))


# ------------------------------------------------- parameter-side conditions


def pm_condition(p: FamilyParams) -> bool:
    """theta1 +- theta2 = omega1 +- omega2 = 0, the two signs chosen independently."""
    t1, t2, w1, w2 = p.as_tuple()
    return (t1 + t2 == 0 or t1 - t2 == 0) and (w1 + w2 == 0 or w1 - w2 == 0)


def pm_condition_matched(p: FamilyParams) -> bool:
    """Same-sign reading, kept for comparison: some eps with t1 = eps t2 and w1 = eps w2."""
    t1, t2, w1, w2 = p.as_tuple()
    return any(t1 == e * t2 and w1 == e * w2 for e in (1, -1))


def flat_condition(p: FamilyParams) -> bool:
    t1, t2, w1, w2 = p.as_tuple()
    for e in (1, -1):
        if t1 == e * t2 == 2 * w1 == 2 * e * w2:
            return True
        if w1 == 0 and w2 == 0 and t1 == e * t2:
            return True
    return False


def star_scalar_flat_condition(p: FamilyParams) -> bool:
    t1, t2, w1, w2 = p.as_tuple()
    return (
        (t1 - 2 * w1 == 0 and t2 - 2 * w2 == 0)
        or (t1 == 0 and w1 == 0)
        or (t2 == 0 and w2 == 0)
        or (w1 == 0 and w2 == 0)
    )


# ------------------------------------------------------------------- grids


@dataclass(frozen=True)
class GridSpec:
    """Per-parameter inclusive rational ranges (min, max, step), ordered
    theta1, theta2, omega1, omega2."""

    ranges: tuple

    def __post_init__(self):
        rs = tuple(tuple(to_fraction(v) for v in r) for r in self.ranges)
        if len(rs) != 4:
            raise ValueError("a grid needs one range per parameter (4)")
        for lo, hi, step in rs:
            if step <= 0:
                raise ValueError("grid step must be positive")
        object.__setattr__(self, "ranges", rs)

    @classmethod
    def uniform(cls, lo, hi, step) -> "GridSpec":
        return cls(((lo, hi, step),) * 4)

    @classmethod
    def parse(cls, specs: Sequence[str]) -> "GridSpec":
        """From ``"min:max:step"`` strings; one string is reused for all four."""
        ranges = [tuple(to_fraction(x) for x in s.split(":")) for s in specs]
        if any(len(r) != 3 for r in ranges):
            raise ValueError("grid ranges are written min:max:step")
        if len(ranges) == 1:
            ranges = ranges * 4
        return cls(tuple(ranges))

    def axis(self, k: int) -> list[Fraction]:
        lo, hi, step = self.ranges[k]
        out, v = [], lo
        while v <= hi:
            out.append(v)
            v += step
        return out

    def raw_points(self) -> Iterator[FamilyParams]:
        axes = [self.axis(k) for k in range(4)]
        for q in product(*axes):
            yield FamilyParams(*q)

    def points(self) -> list[FamilyParams]:
        """Constraint-filtered points in row-major order."""
        pts = [p for p in self.raw_points() if p.satisfies_constraint()]
        if not pts:
            raise EmptyGrid("no grid point satisfies theta1*omega2 = theta2*omega1")
        return pts

    def to_strings(self) -> list[str]:
        return [":".join(format_rational(v) for v in r) for r in self.ranges]


DEFAULT_GRID = GridSpec.uniform(-3, 3, Fraction(1, 2))


# ------------------------------------------------------------------- sweep


@dataclass(frozen=True)
class SweepPoint:
    params: FamilyParams
    flags: ClassFlags
    predicates: PredicateVector


def evaluate_point(p: FamilyParams, mode: str = "exact") -> SweepPoint:
    report = geometry_for(p, mode)
    tol = _tol(mode)
    return SweepPoint(p, class_flags(report.F, tol), predicates_from_report(report, tol))


def _evaluate_exact(p):
    return evaluate_point(p, "exact")


def _evaluate_float(p):
    return evaluate_point(p, "float")


def sweep(grid: GridSpec, mode: str = "exact", workers: int = 1) -> Iterator[SweepPoint]:
    """Evaluate every constrained grid point; output order is the grid order."""
    pts = grid.points()
    fn = _evaluate_exact if mode == "exact" else _evaluate_float
    if workers <= 1:
        for p in pts:
            yield fn(p)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, pts, chunksize=max(1, len(pts) // (workers * 8)))


# --------------------------------------------------------- propositions


@dataclass
class PropositionReport:
    name: str
    assertion_verdicts: list = field(default_factory=list)   # (id, holds_on_grid)
    counterexamples: list = field(default_factory=list)      # (id, params, truth dict)
    points_checked: int = 0
    extra: dict = field(default_factory=dict)

    def verdict(self, assertion_id: str) -> bool:
        return dict(self.assertion_verdicts)[assertion_id]

    @property
    def all_hold(self) -> bool:
        return all(ok for _, ok in self.assertion_verdicts)


PROP_3_2_ASSERTIONS = {
    "1": "phiB connection vanishes in the frame",
    "2": "flat iff theta1=eps*theta2=2*omega1=2*eps*omega2, or omega=0 and theta1=eps*theta2",
    "3": "Ricci-flat iff flat, and *-Ricci-flat iff flat",
    "4": "scalar flat iff theta1+-theta2=omega1+-omega2=0",
    "5": "*-scalar flat iff one of the four listed conditions",
    "6": "isotropic-F0 iff theta1+-theta2=omega1+-omega2=0",
}


def _prop_3_2_point(p: FamilyParams) -> dict[str, tuple[bool, bool]]:
    """assertion id -> (computed side, stated side)."""
    report = _shared_geometry(p)
    pv = predicates_from_report(report)
    pm = pm_condition(p)
    return {
        "1": (connection_is_zero(report.phiB), True),
        "2": (pv.is_flat, flat_condition(p)),
        "3a": (pv.is_ricci_flat, pv.is_flat),
        "3b": (pv.is_star_ricci_flat, pv.is_flat),
        "4": (pv.is_scalar_flat, pm),
        "5": (pv.is_star_scalar_flat, star_scalar_flat_condition(p)),
        "6": (pv.is_isotropic_f0, pm),
    }


def _map_points(fn, pts, workers):
    if workers <= 1:
        return [fn(p) for p in pts]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, pts, chunksize=max(1, len(pts) // (workers * 8))))


def verify_proposition_3_2(grid: GridSpec = DEFAULT_GRID, workers: int = 1) -> PropositionReport:
    pts = grid.points()
    rows = _map_points(_prop_3_2_point, pts, workers)
    rep = PropositionReport("proposition_3_2", points_checked=len(pts))
    sub_ok = {k: True for k in rows[0]}
    for p, row in zip(pts, rows):
        for key, (computed, stated) in row.items():
            if computed != stated:
                sub_ok[key] = False
                rep.counterexamples.append(
                    (key, p, {"computed": computed, "stated": stated})
                )
    for key in ("1", "2"):
        rep.assertion_verdicts.append((key, sub_ok[key]))
    rep.assertion_verdicts.append(("3", sub_ok["3a"] and sub_ok["3b"]))
    for key in ("4", "5", "6"):
        rep.assertion_verdicts.append((key, sub_ok[key]))
    rep.extra["sub_verdicts"] = {"3a": sub_ok["3a"], "3b": sub_ok["3b"]}
    return rep


PROP_3_3_PROPERTIES = {
    1: "isotropic-F0",
    2: "scalar flat",
    3: "*-Einstein",
    4: "Theta, Omega, nabla_xi xi isotropic",
    5: "k01 = k02 = k12 = 0",
    6: "theta1+-theta2=omega1+-omega2=0",
}

# Pairs of Prop. 3.3 properties whose equivalence the family does not support.
KNOWN_3_3_BREAKS = frozenset({3, 5})


def prop_3_3_truth(p: FamilyParams) -> dict[int, bool]:
    report = _shared_geometry(p)
    pv = predicates_from_report(report)
    return {
        1: pv.is_isotropic_f0,
        2: pv.is_scalar_flat,
        3: pv.is_star_einstein,
        4: pv.duals_isotropic,
        5: all(v == 0 for v in report.sectional.values()),
        6: pm_condition(p),
    }


def verify_proposition_3_3(grid: GridSpec = DEFAULT_GRID, workers: int = 1) -> PropositionReport:
    pts = grid.points()
    truths = _map_points(prop_3_3_truth, pts, workers)
    keys = sorted(PROP_3_3_PROPERTIES)
    equiv = {(a, b): True for a in keys for b in keys}
    rep = PropositionReport("proposition_3_3", points_checked=len(pts))
    for p, t in zip(pts, truths):
        for a, b in product(keys, keys):
            if t[a] != t[b]:
                equiv[(a, b)] = False
        if len(set(t.values())) > 1:
            rep.counterexamples.append(("nonconstant", p, dict(t)))
    for a, b in combinations(keys, 2):
        rep.assertion_verdicts.append((f"{a}<=>{b}", equiv[(a, b)]))
    rep.extra["equivalence_matrix"] = [[equiv[(a, b)] for b in keys] for a in keys]
    return rep


def is_known_discrepancy(assertion_id: str) -> bool:
    """Failures that are consequences of the stated formulas themselves.

    Prop. 3.3 pairs involving properties 3 or 5 (e.g. at (1,-1,1,-1)),
    and Prop. 3.2(3) through its *-Ricci-flat half (e.g. at (0,0,1,0)).
    """
    if "<=>" in assertion_id:
        a, b = (int(x) for x in assertion_id.split("<=>"))
        return bool({a, b} & KNOWN_3_3_BREAKS)
    return assertion_id == "3"


# ------------------------------------------------------------- G_I check

GI_SUBSTITUTIONS = {
    # which -> (params (theta1, theta2, omega1, omega2), X1, X2, X3 as (sign, index))
    "first": ((0, 2, 0, -1), (1, 2), (1, 0), (-1, 1)),
    "second": ((2, 0, -1, 0), (1, 1), (-1, 0), (1, 2)),
}


def gi_residuals(which: str, params: FamilyParams | None = None) -> dict[str, np.ndarray]:
    """Residuals of [X1,X3]=X1, [X2,X3]=-X2, [X1,X2]=0 under a substitution."""
    base, *xs = GI_SUBSTITUTIONS[which]
    p = params if params is not None else FamilyParams(*base)
    L = make_family_lee(p)
    X1, X2, X3 = (sign * basis(3, idx) for sign, idx in xs)
    return {
        "[X1,X3]-X1": bracket(L, X1, X3) - X1,
        "[X2,X3]+X2": bracket(L, X2, X3) + X2,
        "[X1,X2]": bracket(L, X1, X2),
    }


def verify_gi_substitution(which: str, params: FamilyParams | None = None) -> bool:
    return all(is_zero(r) for r in gi_residuals(which, params).values())


# ------------------------------------------------------------ mode agreement


def scalar_entries(report: GeometryReport) -> dict[str, object]:
    """Flat name -> scalar map of every exact-mode scalar in a report."""
    out: dict[str, object] = {}

    def put(prefix, arr):
        for idx in np.ndindex(arr.shape):
            out[prefix + "".join(map(str, idx))] = arr[idx]

    put("Gamma", report.connection.Gamma)
    put("F", report.F)
    put("theta", report.lee.theta)
    put("theta_star", report.lee.theta_star)
    put("omega", report.lee.omega)
    c = report.curvature
    put("R", c.R)
    put("rho", c.rho)
    put("rho_star", c.rho_star)
    out["tau"] = c.tau
    out["tau_star"] = c.tau_star
    n = report.norms
    out["norm_nabla_phi"] = n.norm_nabla_phi
    out["norm_nabla_eta"] = n.norm_nabla_eta
    out["norm_nabla_xi"] = n.norm_nabla_xi
    for (i, j), v in report.sectional.items():
        out[f"k{i}{j}"] = v
    put("phiB", report.phiB.Gamma)
    return out


def values_agree(exact, approx, rel_tol: float = FLOAT_TOL, abs_floor: float = 1e-12) -> bool:
    return math.isclose(float(approx), float(exact), rel_tol=rel_tol, abs_tol=abs_floor)


def mode_disagreements(p: FamilyParams, rel_tol: float = FLOAT_TOL) -> list[str]:
    exact = scalar_entries(geometry_for(p, "exact"))
    approx = scalar_entries(geometry_for(p, "float"))
    return [k for k, v in exact.items() if not values_agree(v, approx[k], rel_tol)]
