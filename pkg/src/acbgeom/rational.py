"""Exact scalars and small dense linear algebra over the rationals.

The exact path stores every tensor as a numpy array of ``dtype=object``
holding :class:`fractions.Fraction` entries.  The float path uses the same
routines with ``float64`` arrays; helpers here accept both.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

import numpy as np

Scalar = Union[Fraction, float]

__all__ = [
    "Fraction",
    "to_fraction",
    "format_rational",
    "parse_rational_list",
    "rarray",
    "rzeros",
    "reye",
    "is_zero",
    "max_abs",
    "as_float",
    "inverse",
    "rank",
    "congruence_diagonal",
    "signature",
]


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to :class:`Fraction`.

    Floats are rejected: a binary float silently carries representation
    error into an exact computation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational scalars")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational literal")
        return Fraction(text)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_rational(x) -> str:
    """Canonical string form: ``"p/q"``, or ``"p"`` when q == 1."""
    x = to_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational_list(text: str, length: int | None = None) -> list[Fraction]:
    parts = [p for p in text.split(",")]
    values = [to_fraction(p) for p in parts]
    if length is not None and len(values) != length:
        raise ValueError(f"expected {length} comma-separated rationals, got {len(values)}")
    return values


def rarray(data) -> np.ndarray:
    """Object array of Fractions from (nested) ints, strings or Fractions."""
    arr = np.array(data, dtype=object)
    flat = arr.reshape(-1)
    for idx, v in enumerate(flat):
        flat[idx] = to_fraction(v)
    return flat.reshape(arr.shape)


def rzeros(shape) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr.fill(Fraction(0))
    return arr


def reye(n: int) -> np.ndarray:
    arr = rzeros((n, n))
    for i in range(n):
        arr[i, i] = Fraction(1)
    return arr


def is_zero(arr, tol: float = 0.0) -> bool:
    """True when every entry vanishes (exactly, or within ``tol`` for floats)."""
    a = np.asarray(arr)
    if a.dtype == object:
        return all(v == 0 for v in a.reshape(-1))
    return bool(np.all(np.abs(a) <= tol))


def max_abs(arr) -> Scalar:
    a = np.asarray(arr)
    if a.size == 0:
        return Fraction(0) if a.dtype == object else 0.0
    if a.dtype == object:
        return max(abs(v) for v in a.reshape(-1))
    return float(np.max(np.abs(a)))


def as_float(arr) -> np.ndarray:
    return np.asarray(arr, dtype=object).astype(np.float64)


def inverse(m: np.ndarray) -> np.ndarray:
    """Exact Gauss-Jordan inverse of a square Fraction matrix.

    Raises ZeroDivisionError when the matrix is singular.
    """
    n = m.shape[0]
    a = [[to_fraction(m[i, j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [v / p for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [vr - f * vc for vr, vc in zip(a[r], a[col])]
    return rarray([row[n:] for row in a])


def rank(vectors: Iterable) -> int:
    """Rank of a list of exact vectors (rows)."""
    rows = [[to_fraction(v) for v in vec] for vec in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][col] != 0:
                f = rows[i][col] / rows[r][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def congruence_diagonal(m: np.ndarray) -> list[Fraction]:
    """Diagonal of a matrix congruent to the symmetric matrix ``m``.

    Symmetric Gaussian elimination: row and column operations are applied in
    pairs, so the inertia (Sylvester) is preserved.  A zero pivot with a
    nonzero off-diagonal entry is repaired by adding the partner row/column.
    """
    n = m.shape[0]
    a = [[to_fraction(m[i, j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    diag = []
    for k in range(n):
        if a[k][k] == 0:
            partner = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
            if partner is not None:
                # x_k <- x_k + x_j makes the pivot 2*a[k][j] + a[j][j]; pick a sign that is nonzero
                sign = 1 if 2 * a[k][partner] + a[partner][partner] != 0 else -1
                for c in range(n):
                    a[k][c] += sign * a[partner][c]
                for r in range(n):
                    a[r][k] += sign * a[r][partner]
        p = a[k][k]
        diag.append(p)
        if p == 0:
            continue
        for r in range(k + 1, n):
            f = a[r][k] / p
            if f == 0:
                continue
            for c in range(n):
                a[r][c] -= f * a[k][c]
            for c in range(n):
                a[c][r] -= f * a[c][k]
    return diag


def signature(m: np.ndarray) -> tuple[int, int, int]:
    """(positive, negative, zero) counts of a symmetric Fraction matrix."""
    d = congruence_diagonal(m)
    return (sum(1 for v in d if v > 0), sum(1 for v in d if v < 0), sum(1 for v in d if v == 0))
