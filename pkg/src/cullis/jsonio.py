"""JSON wire formats for matrices and linear maps.

Scalars always travel as strings (decimal residues, or "num/den" fractions)
so that values of any size round-trip exactly.  Matrices are row-major:

    {"n": 3, "k": 2, "field": {"type": "gfp", "p": 5}, "entries": [["1","2"], ...]}

Linear maps carry their (nk) x (nk) matrix the same way under "mat".
"""

from __future__ import annotations

from .errors import CullisError
from .fields import FieldSpec, RATIONALS, Scalar, gf
from .matrix import RectMatrix
from .preserver import LinearMapNK


def field_to_dict(field: FieldSpec) -> dict:
    if field.kind == "prime":
        return {"type": "gfp", "p": field.p}
    return {"type": "rational"}


def field_from_dict(d) -> FieldSpec:
    if not isinstance(d, dict) or "type" not in d:
        raise ValueError(f"bad field descriptor {d!r}")
    if d["type"] == "gfp":
        return gf(int(d["p"]))
    if d["type"] == "rational":
        return RATIONALS
    raise ValueError(f"unknown field type {d['type']!r}")


def scalar_to_str(s: Scalar) -> str:
    return str(s.value)


def matrix_to_dict(X: RectMatrix) -> dict:
    return {
        "n": X.n,
        "k": X.k,
        "field": field_to_dict(X.field),
        "entries": [[scalar_to_str(v) for v in X.row(i)] for i in range(1, X.n + 1)],
    }


def matrix_from_dict(d) -> RectMatrix:
    if not isinstance(d, dict):
        raise ValueError("matrix document must be a JSON object")
    try:
        n, k = int(d["n"]), int(d["k"])
        field = field_from_dict(d["field"])
        entries = d["entries"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed matrix document: {exc}") from exc
    if not isinstance(entries, list) or len(entries) != n:
        raise ValueError(f"expected {n} entry rows")
    rows = []
    for row in entries:
        if not isinstance(row, list) or len(row) != k:
            raise ValueError(f"expected rows of {k} entries")
        rows.append([field.element(v if isinstance(v, str) else int(v)) for v in row])
    return RectMatrix.from_rows(field, rows)


def map_to_dict(T: LinearMapNK) -> dict:
    nk = T.n * T.k
    return {
        "n": T.n,
        "k": T.k,
        "field": field_to_dict(T.field),
        "mat": [[scalar_to_str(v) for v in T.mat.row(i)] for i in range(1, nk + 1)],
    }


def map_from_dict(d) -> LinearMapNK:
    if not isinstance(d, dict):
        raise ValueError("map document must be a JSON object")
    try:
        n, k = int(d["n"]), int(d["k"])
        field = field_from_dict(d["field"])
        mat = d["mat"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed map document: {exc}") from exc
    nk = n * k
    if not isinstance(mat, list) or len(mat) != nk:
        raise ValueError(f"expected {nk} map rows")
    rows = []
    for row in mat:
        if not isinstance(row, list) or len(row) != nk:
            raise ValueError(f"expected map rows of {nk} entries")
        rows.append([field.element(v if isinstance(v, str) else int(v)) for v in row])
    return LinearMapNK(n, k, RectMatrix.from_rows(field, rows))


def coerce_map_to_prime(T: LinearMapNK, p: int) -> LinearMapNK:
    """Reinterpret a map's entries in GF(p); fractions reduce via modular
    inverse of the denominator."""
    field = gf(p)

    def conv(s: Scalar) -> Scalar:
        if T.field.kind == "prime":
            return field.element(s.value)
        num = field.element(s.value.numerator)
        den = field.element(s.value.denominator)
        if den.is_zero:
            raise CullisError(f"denominator of {s} vanishes mod {p}")
        return num * den.inverse()

    nk = T.n * T.k
    rows = [[conv(v) for v in T.mat.row(i)] for i in range(1, nk + 1)]
    return LinearMapNK(T.n, T.k, RectMatrix.from_rows(field, rows))
