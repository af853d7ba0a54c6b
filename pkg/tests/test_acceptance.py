"""Acceptance suite: one test and one PASS/FAIL line per criterion.

Lines are printed as the tests run (visible with ``-s``) and repeated in the
terminal summary.  A criterion that fails is reported as FAIL with the
reason; nothing here is relaxed to make a criterion pass.
"""

from __future__ import annotations

import json
import random
import time
from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from acbgeom import analysis as an
from acbgeom import closed_forms as cf
from acbgeom.algebra import FamilyParams, is_lie_algebra, make_lie_algebra, standard_structure
from acbgeom.algebra import _family_constants
from acbgeom.classification import decomposition_residual
from acbgeom.cli import main
from acbgeom.tensors import phi_canonical_defect, structure_derivatives

pytestmark = pytest.mark.slow

ACCEPTANCE_LINES: list[str] = []
S = standard_structure()


def record(n: int, ok: bool, what: str, detail: str = "") -> None:
    line = f"ACCEPTANCE {n} {'PASS' if ok else 'FAIL'}: {what}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)


def random_constrained(rng: random.Random, count: int) -> list[FamilyParams]:
    """Rational quadruples on the constraint theta1*omega2 = theta2*omega1."""

    def q():
        return Fraction(rng.randint(-12, 12), rng.randint(1, 7))

    out = []
    while len(out) < count:
        u1, u2, lam = q(), q(), q()
        if rng.random() < 0.5:
            p = FamilyParams(lam * u1, lam * u2, u1, u2)
        else:
            p = FamilyParams(u1, u2, lam * u1, lam * u2)
        assert p.satisfies_constraint()
        out.append(p)
    return out


@pytest.fixture(scope="module")
def random_points():
    return random_constrained(random.Random(20261015), 1000)


# ---------------------------------------------------------------------------


def test_criterion_1_jacobi_gate():
    consts = [_family_constants(*map(Fraction, q)) for q in product(range(-3, 4), repeat=4)]
    quads = list(product(range(-3, 4), repeat=4))
    t0 = time.perf_counter()
    exceptions = [
        q for q, C in zip(quads, consts)
        if is_lie_algebra(make_lie_algebra(3, C)) != (q[0] * q[3] == q[1] * q[2])
    ]
    elapsed = time.perf_counter() - t0
    ok = not exceptions and len(quads) == 2401 and elapsed < 1.0
    record(1, ok, "Jacobi gate over {-3..3}^4", f"2401 points, {len(exceptions)} exceptions, {elapsed:.2f}s")
    assert not exceptions
    assert elapsed < 1.0


def test_criterion_2_decomposition_residual(random_points):
    bad = [p for p in random_points if not (decomposition_residual(an.geometry_for(p).F) == 0).all()]
    record(2, not bad, "F - F1 - F11 == 0 on random constrained quadruples",
           f"{len(random_points)} points, {len(bad)} nonzero")
    assert not bad


def _closed_form_mismatches(p: FamilyParams) -> list[str]:
    g = an.geometry_for(p)
    c, n = g.curvature, g.norms
    checks = {
        "Gamma": (g.connection.Gamma == cf.christoffel(p)).all(),
        "F": (g.F == cf.fundamental(p)).all(),
        "R": (c.R == cf.riemann(p)).all(),
        "rho": (c.rho == cf.ricci(p)).all(),
        "rho_star": (c.rho_star == cf.ricci_star(p)).all(),
        "tau": c.tau == cf.scalar_curvature(p),
        "tau_star": c.tau_star == cf.star_scalar_curvature(p),
        "norm_nabla_phi": n.norm_nabla_phi == cf.norm_nabla_phi(p),
        "norm_nabla_eta": n.norm_nabla_eta == cf.norm_nabla_eta(p),
        "norm_nabla_xi": n.norm_nabla_xi == cf.norm_nabla_xi(p),
    }
    return [k for k, ok in checks.items() if not ok]


def test_criterion_3_closed_form_oracle(random_points):
    pts = an.DEFAULT_GRID.points() + random_points
    bad = {p: m for p in pts if (m := _closed_form_mismatches(p))}
    spot = an.geometry_for(FamilyParams(2, 0, -1, 0))
    spot_ok = (
        spot.curvature.tau == 2
        and spot.norms.norm_nabla_phi == 10
        and spot.curvature.rho[2, 2] == -2
    )
    ok = not bad and spot_ok
    record(3, ok, "first-principles tensors equal the closed-form tables",
           f"{len(pts)} points, {len(bad)} mismatching; spot values at (2,0,-1,0) "
           f"{'ok' if spot_ok else 'wrong'}")
    assert not bad
    assert spot_ok


def test_criterion_4_curvature_characterizations():
    rep = an.verify_proposition_3_2(an.DEFAULT_GRID)
    verdicts = dict(rep.assertion_verdicts)
    phiB_zero = verdicts["1"]
    failed = [k for k, v in rep.assertion_verdicts if not v]
    sub = rep.extra["sub_verdicts"]
    detail = f"{rep.points_checked} points; failed assertions: {failed or 'none'}"
    if "3" in failed:
        example = next(p for key, p, _ in rep.counterexamples if key == "3b")
        detail += (f"; *-Ricci-flat half of (3) fails ({sum(k == '3b' for k, _, _ in rep.counterexamples)}"
                   f" points, e.g. {tuple(map(str, example.as_tuple()))}), Ricci-flat half "
                   f"{'holds' if sub['3a'] else 'fails'}")
    record(4, not failed,
           "phiB, flatness, Ricci, scalar, *-scalar and isotropy characterizations (1)-(6)", detail)
    assert phiB_zero, "phiB coefficients do not all vanish"
    assert verdicts["5"], "*-scalar-flat case list mismatch"
    assert not failed, f"assertions failing on the grid: {failed}"


def test_criterion_5_isotropy_equivalences(capsys):
    rep = an.verify_proposition_3_3(an.DEFAULT_GRID)
    verdicts = dict(rep.assertion_verdicts)
    core = [f"{a}<=>{b}" for a, b in ((1, 2), (1, 4), (1, 6), (2, 4), (2, 6), (4, 6))]
    core_ok = all(verdicts[k] for k in core)

    code = main(["verify", "props", "--expect-paper-discrepancies"])
    doc = json.loads(capsys.readouterr().out)
    target = {"theta1": "1", "theta2": "-1", "omega1": "1", "omega2": "-1"}
    listed = [e for e in doc["discrepancies"]["proposition_3_3_nonconstant_points"] if e["params"] == target]
    cex_ok = bool(listed) and listed[0]["sectional"]["k01"] == "-1/2" and listed[0]["truth"]["5"] is False
    ok = core_ok and cex_ok and code == 0 and doc["ok"] is True
    record(5, ok, "isotropy equivalences: (1),(2),(4),(6) equivalent; (1,-1,1,-1) listed with k01=-1/2",
           f"{rep.points_checked} points, {len(rep.counterexamples)} nonconstant points; "
           f"verify --expect-paper-discrepancies exit {code}")
    assert core_ok
    assert cex_ok
    assert code == 0 and doc["ok"] is True


def test_criterion_6_gi_example():
    res = {w: an.verify_gi_substitution(w) for w in ("first", "second")}
    ok = all(res.values())
    record(6, ok, "both substitutions give [X1,X3]=X1, [X2,X3]=-X2, [X1,X2]=0", str(res))
    assert ok


def _property_failures(p: FamilyParams) -> list[str]:
    g = an.geometry_for(p)
    G, C, F, R = g.connection.Gamma, g.algebra.C, g.F, g.curvature.R
    fails = []
    compat = np.einsum("ijk,km->ijm", G, S.g) + np.einsum("imk,kj->ijm", G, S.g)
    if not (compat == 0).all():
        fails.append("metric compatibility")
    if not (G - G.transpose(1, 0, 2) == C).all():
        fails.append("torsion-free")
    f_rhs = (
        np.einsum("ibc,bj,ck->ijk", F, S.phi, S.phi, optimize=True)
        + np.einsum("j,iak,a->ijk", S.eta, F, S.xi, optimize=True)
        + np.einsum("k,ija,a->ijk", S.eta, F, S.xi, optimize=True)
    )
    if not ((F == F.transpose(0, 2, 1)).all() and (F == f_rhs).all()):
        fails.append("F identities")
    if not ((R == -R.transpose(1, 0, 2, 3)).all() and (R == -R.transpose(0, 1, 3, 2)).all()
            and (R == R.transpose(2, 3, 0, 1)).all()):
        fails.append("R symmetries")
    if not (R + R.transpose(1, 2, 0, 3) + R.transpose(2, 0, 1, 3) == 0).all():
        fails.append("first Bianchi")
    d = structure_derivatives(g.phiB, S)
    if not all((v == 0).all() for v in d.values()):
        fails.append("naturality")
    if not (phi_canonical_defect(g.phiB_torsion, S) == 0).all():
        fails.append("phi-canonical defect")
    return fails


def test_criterion_7_property_suites():
    pts = an.DEFAULT_GRID.points()
    t0 = time.perf_counter()
    bad = {p: f for p in pts if (f := _property_failures(p))}
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60.0
    record(7, ok, "exact identity suites on every default-grid point",
           f"{len(pts)} points, {len(bad)} failing, {elapsed:.1f}s")
    assert not bad
    assert elapsed < 60.0


def test_criterion_8_mode_agreement():
    pts = an.DEFAULT_GRID.points()
    bad = {p: d for p in pts if (d := an.mode_disagreements(p))}
    record(8, not bad, "float mode reproduces exact scalars within 1e-9 relative",
           f"{len(pts)} points, {len(bad)} disagreeing")
    assert not bad
