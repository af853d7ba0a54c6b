"""JSON report schema.

Exact values serialize as strings ``"p/q"`` (``"p"`` for integers); float
mode writes JSON numbers.  Field order is fixed by construction so that
``dumps(loads(s)) == s`` for every report this module emits.
"""

from __future__ import annotations

import json

import numpy as np

from .algebra import ACBStructure, LieAlgebra
from .analysis import predicates_from_report, star_einstein_constant
from .classification import class_flags, component_params
from .rational import Fraction, format_rational, is_zero
from .tensors import GeometryReport, compute_geometry, ricci_frame_forms

SCHEMA_VERSION = "1"


def scalar(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return format_rational(int(x))
    return float(x)


def nested(arr):
    a = np.asarray(arr)
    if a.ndim == 0:
        return scalar(a.item() if a.dtype != object else a[()])
    return [nested(sub) for sub in a]


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def geometry_report(
    L: LieAlgebra, S: ACBStructure, input_doc: dict, tol: float = 0.0
) -> dict:
    """Full report document for one algebra/structure pair."""
    geo = compute_geometry(L, S)
    return report_document(geo, input_doc, tol)


def _discrepancies(geo: GeometryReport, tol: float) -> list[dict]:
    out = []
    if not is_zero(geo.F - geo.F_brackets, tol):
        out.append({
            "id": "F_bracket_formula",
            "detail": "F from the connection differs from the bracket-only formula",
        })
    if geo.structure.dim == 3 and geo.exact:
        S = geo.structure
        diag = S.g.tolist() == [[1, 0, 0], [0, 1, 0], [0, 0, -1]]
        if diag:
            _, rs_frame = ricci_frame_forms(geo.curvature.R)
            if not is_zero(rs_frame - geo.curvature.rho_star):
                out.append({
                    "id": "rho_star_frame_form",
                    "detail": "rho*_jk = R_1kj2 + R_2jk1 disagrees with the contraction "
                              "g^ij R(e_i, x, y, phi e_j); the contraction is reported",
                    "frame_form": nested(rs_frame),
                })
    return out


def report_document(geo: GeometryReport, input_doc: dict, tol: float = 0.0) -> dict:
    c = geo.curvature
    flags = class_flags(geo.F, tol) if geo.structure.dim == 3 else None
    doc = {
        "schema_version": SCHEMA_VERSION,
        "input": input_doc,
        "connection": {
            "levi_civita": nested(geo.connection.Gamma),
            "phiB": nested(geo.phiB.Gamma),
            "phiB_torsion": nested(geo.phiB_torsion),
        },
        "fundamental_tensor": {
            "F": nested(geo.F),
        },
        "lee_forms": {
            "theta": nested(geo.lee.theta),
            "theta_star": nested(geo.lee.theta_star),
            "omega": nested(geo.lee.omega),
        },
        "norms": {
            "norm_nabla_phi": scalar(geo.norms.norm_nabla_phi),
            "norm_nabla_eta": scalar(geo.norms.norm_nabla_eta),
            "norm_nabla_xi": scalar(geo.norms.norm_nabla_xi),
        },
        "curvature": {
            "R": nested(c.R),
            "rho": nested(c.rho),
            "rho_star": nested(c.rho_star),
            "tau": scalar(c.tau),
            "tau_star": scalar(c.tau_star),
            "sectional": {f"k{i}{j}": scalar(v) for (i, j), v in geo.sectional.items()},
        },
        "class_flags": None,
        "predicates": None,
        "discrepancies": _discrepancies(geo, tol),
    }
    if flags is not None:
        cp = component_params(geo.F, tol)
        doc["fundamental_tensor"]["component_params"] = {
            "theta1": scalar(cp.theta1),
            "theta2": scalar(cp.theta2),
            "omega1": scalar(cp.omega1),
            "omega2": scalar(cp.omega2),
            "consistent": cp.consistent,
        }
        doc["class_flags"] = flags_document(flags)
        pv = predicates_from_report(geo, tol)
        preds = pv.as_dict()
        alpha = star_einstein_constant(geo, tol)
        preds["alpha"] = None if alpha is None else scalar(alpha)
        preds["starEinsteinReading"] = "rho(e_i,e_j) = alpha*g~(e_i,e_j) for horizontal i,j"
        doc["predicates"] = preds
    return doc


def flags_document(flags) -> dict:
    return {
        "inF0": flags.inF0,
        "inF1": flags.inF1,
        "inF11": flags.inF11,
        "inF1plusF11": flags.inF1plusF11,
        "residualMaxAbs": scalar(flags.residual_max_abs),
    }


def params_document(p) -> dict:
    return {
        "theta1": format_rational(p.theta1),
        "theta2": format_rational(p.theta2),
        "omega1": format_rational(p.omega1),
        "omega2": format_rational(p.omega2),
    }


def text_lines(doc: dict, prefix: str = "") -> list[str]:
    """Flatten a document to ``dotted.key = value`` lines for text output."""
    lines = []
    if isinstance(doc, dict):
        for k, v in doc.items():
            lines.extend(text_lines(v, f"{prefix}{k}."))
    elif isinstance(doc, list) and doc and not isinstance(doc[0], (dict, list)):
        lines.append(f"{prefix[:-1]} = [{', '.join(str(v) for v in doc)}]")
    elif isinstance(doc, list):
        for i, v in enumerate(doc):
            lines.extend(text_lines(v, f"{prefix}{i}."))
    else:
        lines.append(f"{prefix[:-1]} = {json.dumps(doc)}")
    return lines
