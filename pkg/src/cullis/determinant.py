"""The rectangular determinant and its three evaluation algorithms.

For a tall matrix X (n rows, k columns, n >= k) the determinant is the signed
sum over all injections sigma of [k] into [n] of
sgn(sigma) * x[sigma(1),1] * ... * x[sigma(k),k].  It can equivalently be
computed as an alternating sum of maximal square minors, or by Laplace
expansion along any column; all three routes are implemented and must agree.
"""

from __future__ import annotations

from itertools import combinations, permutations
from math import comb, perm

from . import combinatorics as comb_mod
from .errors import IndexOutOfRange, ResourceGuard, ShapeError, ShapeMismatch, FieldMismatch
from .fields import Scalar
from .matrix import RectMatrix, submatrix_keep

DEFAULT_OP_BUDGET = 10_000_000


def _require_tall(X: RectMatrix):
    if X.k > X.n:
        raise ShapeError(f"{X.n}x{X.k}: need at least as many rows as columns")


def _guard(cost: int, budget: int | None):
    limit = DEFAULT_OP_BUDGET if budget is None else budget
    if cost > limit:
        raise ResourceGuard(f"estimated {cost} elementary products exceeds budget {limit}")


def det_definition(X: RectMatrix, budget: int | None = None) -> Scalar:
    """Signed sum over all n!/(n-k)! injections (the defining formula)."""
    _require_tall(X)
    n, k = X.n, X.k
    _guard(perm(n, k) * k, budget)
    ent = X.entries
    total = X.field.zero
    for images in permutations(range(1, n + 1), k):
        prod = X.field.one
        for j, i in enumerate(images):
            x = ent[(i - 1) * k + j]
            if not x.value:
                prod = None
                break
            prod = prod * x
        if prod is None:
            continue
        s = comb_mod.perm_sign_of(images) * comb_mod.sgn_of_subset(sorted(images))
        total = total + prod if s > 0 else total - prod
    return total


def det_laplace(X: RectMatrix, j: int = 1, budget: int | None = None) -> Scalar:
    """Laplace expansion along column j, memoized on surviving index sets."""
    _require_tall(X)
    if not 1 <= j <= X.k:
        raise IndexOutOfRange(f"column {j} outside 1..{X.k}")
    n, k = X.n, X.k
    _guard(comb(n, k) * n * k, budget)
    ent = X.entries
    field = X.field
    zero = field.zero
    memo: dict[tuple[tuple[int, ...], tuple[int, ...]], Scalar] = {}

    def expand(rows: tuple[int, ...], cols: tuple[int, ...], along: int) -> Scalar:
        # along: 0-based position within cols to expand on
        if len(cols) == 1:
            c = cols[0]
            acc = zero
            for pos, r in enumerate(rows):
                x = ent[(r - 1) * k + (c - 1)]
                if x.value:
                    acc = acc + x if pos % 2 == 0 else acc - x
            return acc
        key = (rows, cols)
        cached = memo.get(key)
        if cached is not None:
            return cached
        c = cols[along]
        rest = cols[:along] + cols[along + 1 :]
        acc = zero
        for pos, r in enumerate(rows):
            x = ent[(r - 1) * k + (c - 1)]
            if not x.value:
                continue
            minor = expand(rows[:pos] + rows[pos + 1 :], rest, 0)
            term = x * minor
            acc = acc + term if (pos + along) % 2 == 0 else acc - term
        memo[key] = acc
        return acc

    return expand(tuple(range(1, n + 1)), tuple(range(1, k + 1)), j - 1)


def det_square(rows: list[list[Scalar]]) -> Scalar:
    """Ordinary determinant of a square scalar array by Gaussian elimination."""
    m = [list(r) for r in rows]
    size = len(m)
    field = m[0][0].field
    if size == 1:
        return m[0][0]
    if size == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    sign = 1
    for c in range(size):
        piv = next((i for i in range(c, size) if m[i][c].value), None)
        if piv is None:
            return field.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        inv = m[c][c].inverse()
        for i in range(c + 1, size):
            if m[i][c].value:
                f = m[i][c] * inv
                for jj in range(c, size):
                    m[i][jj] = m[i][jj] - f * m[c][jj]
    prod = m[0][0]
    for c in range(1, size):
        prod = prod * m[c][c]
    return prod if sign > 0 else -prod


def det_minorsum(X: RectMatrix, budget: int | None = None) -> Scalar:
    """Alternating sum of maximal k-by-k minors over all row k-subsets."""
    _require_tall(X)
    n, k = X.n, X.k
    _guard(comb(n, k) * k ** 3, budget)
    ent = X.entries
    total = X.field.zero
    for rows in combinations(range(1, n + 1), k):
        minor = det_square([[ent[(r - 1) * k + j] for j in range(k)] for r in rows])
        if not minor.value:
            continue
        s = comb_mod.sgn_of_subset(rows)
        total = total + minor if s > 0 else total - minor
    return total


def det(X: RectMatrix, budget: int | None = None) -> Scalar:
    """Dispatcher: picks the cheaper of the minor-sum and injection routes.

    The choice is by operation-count estimate only; every backend returns the
    same value on the same input.
    """
    _require_tall(X)
    n, k = X.n, X.k
    cost_minor = comb(n, k) * k ** 3
    cost_def = perm(n, k) * k
    if cost_minor <= cost_def:
        return det_minorsum(X, budget)
    return det_definition(X, budget)


def det_product_rhs(X: RectMatrix, Y: RectMatrix, budget: int | None = None) -> Scalar:
    """Expansion of det(X @ Y) as sum over column l-subsets d of X of
    det(X restricted to columns d) * det(rows d of Y)."""
    if X.field != Y.field:
        raise FieldMismatch(f"{X.field!r} vs {Y.field!r}")
    n, k, l = X.n, X.k, Y.k
    if Y.n != k:
        raise ShapeMismatch(f"{n}x{k} times {Y.n}x{l}")
    if not (1 <= l <= k <= n):
        raise ShapeError(f"need 1 <= {l} <= {k} <= {n}")
    total = X.field.zero
    all_rows = range(1, n + 1)
    for d in combinations(range(1, k + 1), l):
        yd = det_square([[Y.entry(i, j) for j in range(1, l + 1)] for i in d])
        if not yd.value:
            continue
        xd = det(submatrix_keep(X, all_rows, d), budget)
        total = total + xd * yd
    return total


def semicyclic_shift(X: RectMatrix, i: int) -> RectMatrix:
    """Rows i..n followed by the negated rows 1..i-1 (same column order)."""
    if not 1 <= i <= X.n:
        raise IndexOutOfRange(f"row {i} outside 1..{X.n}")
    rows = [X.row(r) for r in range(i, X.n + 1)]
    rows += [[-v for v in X.row(r)] for r in range(1, i)]
    return RectMatrix.from_rows(X.field, rows)
