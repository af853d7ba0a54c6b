"""Command-line front end.

Exit status: 0 success, 1 malformed input, 2 input violating a defining
identity (Jacobi, antisymmetry, structure axioms), 3 a verification that
found mismatches.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis
from .algebra import (
    FamilyParams,
    axioms_hold,
    check_structure_axioms,
    is_lie_algebra,
    jacobi_defect,
    make_family,
    make_family_lee,
    make_lie_algebra,
    standard_structure,
)
from .errors import AxiomViolation, GeometryError, JacobiViolation, ValidationError
from .rational import format_rational, max_abs, parse_rational_list, to_fraction
from .report import (
    SCHEMA_VERSION,
    dumps,
    flags_document,
    geometry_report,
    nested,
    params_document,
    scalar,
    text_lines,
)

EXIT_OK, EXIT_MALFORMED, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2, 3


class MalformedInput(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Usage errors are malformed input (exit 1), not argparse's default 2,
    which this tool reserves for identity violations."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_MALFORMED, f"{self.prog}: error: {message}\n")


# --------------------------------------------------------------- inputs


def _load_input(args):
    """Return (LieAlgebra, input document) from exactly one input source."""
    sources = [s for s in ("family", "family_lee", "file") if getattr(args, s, None)]
    if len(sources) != 1:
        raise MalformedInput("give exactly one of --family, --family-lee, --file")
    try:
        if args.family:
            a, b, c, d = parse_rational_list(args.family, 4)
            return _from_family(a, b, c, d)
        if args.family_lee:
            return _from_family_lee(*parse_rational_list(args.family_lee, 4))
        with open(args.file, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (ValueError, TypeError, ZeroDivisionError, OSError) as exc:
        raise MalformedInput(str(exc)) from exc
    return _from_document(doc)


def _from_family(a, b, c, d):
    L = make_family(a, b, c, d)
    doc = {"kind": "family", "a": format_rational(a), "b": format_rational(b),
           "c": format_rational(c), "d": format_rational(d)}
    doc["lee_params"] = params_document(FamilyParams.from_abcd(a, b, c, d))
    return L, doc


def _from_family_lee(t1, t2, w1, w2):
    p = FamilyParams(t1, t2, w1, w2)
    L = make_family_lee(p)
    return L, {"kind": "family_lee", **params_document(p)}


def _from_document(doc):
    if not isinstance(doc, dict):
        raise MalformedInput("input document must be a JSON object")
    try:
        if "family" in doc:
            f = doc["family"]
            return _from_family(*(to_fraction(f[k]) for k in ("a", "b", "c", "d")))
        if "family_lee" in doc:
            f = doc["family_lee"]
            return _from_family_lee(*(to_fraction(f[k]) for k in ("theta1", "theta2", "omega1", "omega2")))
        dim = doc["dim"]
        constants = doc["constants"]
        if not isinstance(dim, int) or isinstance(dim, bool):
            raise MalformedInput("dim must be an integer")
        L = make_lie_algebra(dim, constants)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, GeometryError):
            raise
        raise MalformedInput(f"bad input document: {exc}") from exc
    if dim != 3:
        raise MalformedInput("the geometric layer is implemented for dim 3")
    if not is_lie_algebra(L):
        raise JacobiViolation(
            f"Jacobi violated: max |cyclic sum| = {format_rational(max_abs(jacobi_defect(L)))}"
        )
    return L, {"kind": "constants", "dim": dim, "constants": nested(L.C)}


# ------------------------------------------------------------- commands


def _structure(mode):
    S = standard_structure()
    if not axioms_hold(S):
        failed = [k for k, v in check_structure_axioms(S).items() if not v.holds]
        raise AxiomViolation(f"structure axioms violated: {', '.join(failed)}")
    return S if mode == "exact" else S.to_float()


def cmd_report(args) -> tuple[int, dict]:
    L, doc = _load_input(args)
    S = _structure(args.mode)
    if args.mode == "float":
        L = L.to_float()
    doc["mode"] = args.mode
    tol = args.tol if args.mode == "float" else 0.0
    return EXIT_OK, geometry_report(L, S, doc, tol)


def cmd_classify(args) -> tuple[int, dict]:
    code, full = cmd_report(args)
    return code, {
        "schema_version": SCHEMA_VERSION,
        "input": full["input"],
        "component_params": full["fundamental_tensor"]["component_params"],
        "class_flags": full["class_flags"],
    }


def _grid(args):
    if not args.grid:
        return analysis.DEFAULT_GRID
    try:
        return analysis.GridSpec.parse(args.grid)
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInput(f"bad grid: {exc}") from exc


def _point_detail(p) -> dict:
    geo = analysis.geometry_for(p)
    return {
        "params": params_document(p),
        "sectional": {f"k{i}{j}": scalar(v) for (i, j), v in geo.sectional.items()},
        "rho": nested(geo.curvature.rho),
        "rho_star": nested(geo.curvature.rho_star),
    }


def cmd_verify(args) -> tuple[int, dict]:
    grid = _grid(args)
    r32 = analysis.verify_proposition_3_2(grid, workers=args.workers)
    r33 = analysis.verify_proposition_3_3(grid, workers=args.workers)
    gi = {w: analysis.verify_gi_substitution(w) for w in ("first", "second")}

    discrepancies = []
    failed_unknown = []
    for rep, prefix in ((r32, "proposition_3_2"), (r33, "proposition_3_3")):
        for aid, holds in rep.assertion_verdicts:
            if holds:
                continue
            known = analysis.is_known_discrepancy(aid)
            if not known:
                failed_unknown.append(f"{prefix}:{aid}")
            discrepancies.append({"assertion": f"{prefix}:{aid}", "known": known})
    for w, ok in gi.items():
        if not ok:
            failed_unknown.append(f"gi_example:{w}")

    mismatch_points_32 = []
    for key, p, truth in r32.counterexamples:
        entry = _point_detail(p)
        entry["assertion"] = key
        entry.update(truth)
        mismatch_points_32.append(entry)
    nonconstant_33 = []
    for _, p, truth in r33.counterexamples:
        entry = _point_detail(p)
        entry["truth"] = {str(k): v for k, v in truth.items()}
        nonconstant_33.append(entry)

    doc = {
        "schema_version": SCHEMA_VERSION,
        "grid": grid.to_strings(),
        "proposition_3_2": {
            "points_checked": r32.points_checked,
            "assertions": [
                {"id": aid, "statement": analysis.PROP_3_2_ASSERTIONS[aid], "holds": holds}
                for aid, holds in r32.assertion_verdicts
            ],
            "sub_verdicts": r32.extra["sub_verdicts"],
            "mismatches": mismatch_points_32,
        },
        "proposition_3_3": {
            "points_checked": r33.points_checked,
            "properties": {str(k): v for k, v in analysis.PROP_3_3_PROPERTIES.items()},
            "assertions": [{"id": aid, "holds": holds} for aid, holds in r33.assertion_verdicts],
            "equivalence_matrix": r33.extra["equivalence_matrix"],
        },
        "gi_example": gi,
        "discrepancies": {
            "failed_assertions": discrepancies,
            "proposition_3_3_nonconstant_points": nonconstant_33,
        },
    }
    if args.expect_paper_discrepancies:
        ok = not failed_unknown
    else:
        ok = not discrepancies and all(gi.values())
    doc["ok"] = ok
    return (EXIT_OK if ok else EXIT_MISMATCH), doc


def cmd_sweep(args) -> tuple[int, dict]:
    grid = _grid(args)
    points = []
    for sp in analysis.sweep(grid, mode=args.mode, workers=args.workers):
        preds = sp.predicates.as_dict()
        preds["alpha"] = None if sp.predicates.alpha is None else scalar(sp.predicates.alpha)
        points.append({
            "params": params_document(sp.params),
            "class_flags": flags_document(sp.flags),
            "predicates": preds,
        })
    return EXIT_OK, {
        "schema_version": SCHEMA_VERSION,
        "grid": grid.to_strings(),
        "mode": args.mode,
        "count": len(points),
        "points": points,
    }


def cmd_gi_check(args) -> tuple[int, dict]:
    res = {w: analysis.verify_gi_substitution(w) for w in ("first", "second")}
    return (EXIT_OK if all(res.values()) else EXIT_MISMATCH), {
        "schema_version": SCHEMA_VERSION,
        "gi_example": res,
    }


# --------------------------------------------------------------- parser


def _add_input_options(p):
    p.add_argument("--family", metavar="a,b,c,d", help="structure constants a,b,c,d")
    p.add_argument("--family-lee", metavar="t1,t2,w1,w2", help="Lee-component parameters")
    p.add_argument("--file", metavar="PATH", help="JSON input document")


def _add_output_options(p, modes=True):
    p.add_argument("--format", choices=("json", "text"), default="json")
    if modes:
        p.add_argument("--mode", choices=("exact", "float"), default="exact")
        p.add_argument("--tol", type=float, default=analysis.FLOAT_TOL,
                       help="zero tolerance in float mode (default 1e-9)")


def _add_grid_options(p):
    p.add_argument("--grid", action="append", metavar="min:max:step",
                   help="per-parameter range, repeat 4 times or give once for all; "
                        "write --grid=-1:1:1 for negative bounds")
    p.add_argument("--workers", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="acbgeom",
        description="Exact geometry of left-invariant almost contact B-metric structures",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="full geometry report")
    _add_input_options(p)
    _add_output_options(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("classify", help="class membership in F0, F1, F11, F1+F11")
    _add_input_options(p)
    _add_output_options(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="grid verification of the family propositions")
    p.add_argument("target", choices=("props",))
    _add_grid_options(p)
    _add_output_options(p, modes=False)
    p.add_argument("--expect-paper-discrepancies", action="store_true",
                   help="do not fail on the known discrepancies; still report them")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="evaluate flags and predicates over a grid")
    _add_grid_options(p)
    _add_output_options(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("gi-check", help="check the hyperbolic-motions substitutions")
    _add_output_options(p, modes=False)
    p.set_defaults(func=cmd_gi_check)
    return parser


def _emit(doc: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(dumps(doc))
    else:
        out.write("\n".join(text_lines(doc)) + "\n")


def _error(kind: str, message: str, fmt: str, code: int) -> int:
    if fmt == "json":
        sys.stdout.write(dumps({"schema_version": SCHEMA_VERSION,
                                "error": {"kind": kind, "message": message}}))
    else:
        print(f"error: {message}", file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "json")
    try:
        code, doc = args.func(args)
    except ValidationError as exc:
        return _error(type(exc).__name__, str(exc), fmt, EXIT_INVALID)
    except (MalformedInput, GeometryError) as exc:
        return _error(type(exc).__name__, str(exc), fmt, EXIT_MALFORMED)
    _emit(doc, fmt, sys.stdout)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
