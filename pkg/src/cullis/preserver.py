"""Linear endomorphisms of the n x k matrix space and determinant preservation.

A map is stored as its (nk) x (nk) matrix acting on the column-major
flattening, which keeps composition, invertibility checks and exhaustive
enumeration uniform.  Preservation can be decided three ways with an explicit
soundness hierarchy: exhaustively over small finite spaces, symbolically by
comparing coefficient maps of det(T(X)) and det(X), or by random sampling
(which can only ever refute, never certify).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product

from . import combinatorics as comb_mod
from . import sympoly
from .determinant import det, det_square
from .errors import (
    BudgetExceeded,
    FieldMismatch,
    ParityError,
    ShapeError,
    ShapeMismatch,
)
from .fields import FieldSpec, Scalar
from .lambdapoly import max_deg_over_all_A
from .matrix import (
    RectMatrix,
    basis_matrix,
    identity,
    ones,
    rank,
    random_matrix,
    submatrix_keep,
    unvec,
    vec,
    zeros,
)

DEFAULT_SEARCH_BUDGET = 1_000_000


class LinearMapNK:
    """A linear map on n x k matrices, as a square matrix on vec(X)."""

    __slots__ = ("n", "k", "field", "mat")

    def __init__(self, n: int, k: int, mat: RectMatrix):
        if mat.n != n * k or mat.k != n * k:
            raise ShapeMismatch(f"map matrix {mat.n}x{mat.k} for shape {n}x{k}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "field", mat.field)
        object.__setattr__(self, "mat", mat)

    def __setattr__(self, name, value):
        raise AttributeError("LinearMapNK is immutable")

    @classmethod
    def identity_map(cls, field: FieldSpec, n: int, k: int) -> "LinearMapNK":
        return cls(n, k, identity(field, n * k))

    @classmethod
    def from_function(cls, field: FieldSpec, n: int, k: int, fn) -> "LinearMapNK":
        """Build the matrix of a linear function from its unit-matrix images."""
        cols = []
        for j in range(1, k + 1):
            for i in range(1, n + 1):
                cols.append(vec(fn(basis_matrix(field, n, k, i, j))))
        nk = n * k
        rows = [[cols[c][r] for c in range(nk)] for r in range(nk)]
        return cls(n, k, RectMatrix.from_rows(field, rows))

    def apply(self, X: RectMatrix) -> RectMatrix:
        if (X.n, X.k) != (self.n, self.k):
            raise ShapeMismatch(f"{X.n}x{X.k} input for {self.n}x{self.k} map")
        if X.field != self.field:
            raise FieldMismatch(f"{X.field!r} vs {self.field!r}")
        v = vec(X)
        ent = self.mat.entries
        nk = self.n * self.k
        out = []
        for r in range(nk):
            acc = self.field.zero
            base = r * nk
            for c in range(nk):
                m = ent[base + c]
                if m.value and v[c].value:
                    acc = acc + m * v[c]
            out.append(acc)
        return unvec(out, self.n, self.k, self.field)

    def compose(self, other: "LinearMapNK") -> "LinearMapNK":
        """self after other."""
        if (self.n, self.k) != (other.n, other.k):
            raise ShapeMismatch("composition of maps on different shapes")
        return LinearMapNK(self.n, self.k, self.mat @ other.mat)

    def is_invertible(self) -> bool:
        return rank(self.mat) == self.n * self.k

    def __eq__(self, other):
        return (
            isinstance(other, LinearMapNK)
            and (self.n, self.k) == (other.n, other.k)
            and self.mat == other.mat
        )

    def __hash__(self):
        return hash((self.n, self.k, self.mat))

    def __repr__(self):
        return f"LinearMapNK({self.n}x{self.k} over {self.field!r})"


def apply(T: LinearMapNK, X: RectMatrix) -> RectMatrix:
    return T.apply(X)


@dataclass(frozen=True)
class PreserverReport:
    """Outcome of a preservation check; `violates` always carries a witness."""

    verdict: str  # "preserves" | "violates" | "inconclusive"
    method: str  # "exhaustive" | "symbolic" | "random"
    witness: RectMatrix | None = None
    samples: int | None = None
    seed: int | None = None

    @property
    def preserves(self) -> bool:
        return self.verdict == "preserves"


def make_two_sided(A: RectMatrix, B: RectMatrix) -> LinearMapNK:
    """The map X -> A @ X @ B for square A (n x n) and B (k x k)."""
    if A.n != A.k or B.n != B.k:
        raise ShapeMismatch("both factors must be square")
    if A.field != B.field:
        raise FieldMismatch(f"{A.field!r} vs {B.field!r}")
    return LinearMapNK.from_function(A.field, A.n, B.n, lambda X: A @ X @ B)


def check_sign_condition(A: RectMatrix, B: RectMatrix) -> bool:
    """True when det(columns d of A) * det(B) equals the sign of d for every
    column k-subset d; equivalent to X -> A @ X @ B preserving det."""
    if A.n != A.k or B.n != B.k:
        raise ShapeMismatch("both factors must be square")
    if A.field != B.field:
        raise FieldMismatch(f"{A.field!r} vs {B.field!r}")
    n, k = A.n, B.n
    if k > n:
        raise ShapeError(f"inner size {k} exceeds outer size {n}")
    det_b = det_square([[B.entry(i, j) for j in range(1, k + 1)] for i in range(1, k + 1)])
    all_rows = range(1, n + 1)
    for d in combinations(range(1, n + 1), k):
        lhs = det(submatrix_keep(A, all_rows, d)) * det_b
        if lhs != A.field.element(comb_mod.sgn_of_subset(d)):
            return False
    return True


# -- preservation checking -------------------------------------------------------


def _exhaustive_tables(T: LinearMapNK, budget: int | None):
    p = T.field.p
    nk = T.n * T.k
    total = p ** nk
    limit = DEFAULT_SEARCH_BUDGET if budget is None else budget
    if total > limit:
        raise BudgetExceeded(f"{total} inputs exceeds budget {limit}")
    dets: dict[tuple[int, ...], int] = {}
    for v in product(range(p), repeat=nk):
        X = unvec([T.field.element(x) for x in v], T.n, T.k, T.field)
        dets[v] = det(X).value
    rows = [[e.value for e in T.mat.row(i)] for i in range(1, nk + 1)]
    return dets, rows


def _is_preserver_exhaustive(T: LinearMapNK, budget: int | None) -> PreserverReport:
    if T.field.kind != "prime":
        raise FieldMismatch("exhaustive checking needs a finite field")
    p = T.field.p
    nk = T.n * T.k
    dets, rows = _exhaustive_tables(T, budget)
    for v, dv in dets.items():
        y = tuple(sum(r[c] * v[c] for c in range(nk) if v[c]) % p for r in rows)
        if dets[y] != dv:
            witness = unvec([T.field.element(x) for x in v], T.n, T.k, T.field)
            return PreserverReport("violates", "exhaustive", witness)
    return PreserverReport("preserves", "exhaustive")


def _random_violation(T: LinearMapNK, samples: int, seed: int) -> RectMatrix | None:
    rng = random.Random(seed)
    for _ in range(samples):
        X = random_matrix(T.field, T.n, T.k, rng)
        if det(T.apply(X)) != det(X):
            return X
    return None


def _is_preserver_symbolic(T: LinearMapNK, budget: int | None, seed: int) -> PreserverReport:
    mat_rows = [[e.value for e in T.mat.row(i)] for i in range(1, T.n * T.k + 1)]
    lhs = sympoly.det_poly_of_map(mat_rows, T.n, T.k, T.field, budget)
    rhs = sympoly.det_poly_identity(T.n, T.k, T.field)
    if lhs == rhs:
        return PreserverReport("preserves", "symbolic")
    witness = _random_violation(T, 500, seed)
    if witness is not None:
        return PreserverReport("violates", "symbolic", witness)
    # coefficient maps differ yet no witness sampled; over a field larger than
    # the column count that cannot happen, otherwise settle pointwise
    if T.field.kind == "prime" and T.field.p <= T.k:
        return _is_preserver_exhaustive(T, budget)
    raise AssertionError("formally distinct polynomials with no evaluation witness")


def is_preserver(
    T: LinearMapNK,
    method: str = "symbolic",
    budget: int | None = None,
    samples: int = 200,
    seed: int = 0,
) -> PreserverReport:
    """Decide whether det(T(X)) = det(X) for all X.

    `exhaustive` sweeps every matrix over a finite field (space permitting),
    `symbolic` compares formal coefficient maps, `random` samples and can
    only return `violates` or `inconclusive`.
    """
    if T.k > T.n:
        raise ShapeError(f"{T.n}x{T.k}: need at least as many rows as columns")
    if method == "exhaustive":
        return _is_preserver_exhaustive(T, budget)
    if method == "symbolic":
        return _is_preserver_symbolic(T, budget, seed)
    if method == "random":
        witness = _random_violation(T, samples, seed)
        if witness is not None:
            return PreserverReport("violates", "random", witness, samples, seed)
        return PreserverReport("inconclusive", "random", None, samples, seed)
    raise ValueError(f"unknown method {method!r}")


# -- constructions ----------------------------------------------------------------


def s_shift_apply(X: RectMatrix, i: int, j: int) -> RectMatrix:
    """Semi-cyclic shift with sign corrections, applied directly to X:
    rows i..n then negated rows 1..i-1, columns 1 and j exchanged, the new
    first column negated unless j = 1, everything scaled by (-1)**(n-i)."""
    n = X.n
    if not 1 <= i <= n:
        raise ShapeError(f"row {i} outside 1..{n}")
    if not 1 <= j <= X.k:
        raise ShapeError(f"column {j} outside 1..{X.k}")
    rows = [X.row(r) for r in range(i, n + 1)]
    rows += [[-v for v in X.row(r)] for r in range(1, i)]
    if j != 1:
        for r in rows:
            r[0], r[j - 1] = r[j - 1], r[0]
            r[0] = -r[0]
    if (n - i) & 1:
        rows = [[-v for v in r] for r in rows]
    return RectMatrix.from_rows(X.field, rows)


def make_s_shift(n: int, k: int, i: int, j: int, field: FieldSpec) -> LinearMapNK:
    """The semi-cyclic shift map as a linear endomorphism; invertible by
    construction, and determinant preserving whenever n + k is even."""
    return LinearMapNK.from_function(field, n, k, lambda X: s_shift_apply(X, i, j))


def _corner_sums(X: RectMatrix) -> Scalar:
    """S1 + (-1)**n * S2 with S1, S2 the alternating sums of the inner rows
    of the two columns; the parity twist keeps the rewrite identity exact for
    odd row counts as well."""
    n = X.n
    s1 = X.field.zero
    s2 = X.field.zero
    for r in range(2, n):
        v1, v2 = X.entry(r, 1), X.entry(r, 2)
        if r % 2 == 0:
            s1, s2 = s1 + v1, s2 + v2
        else:
            s1, s2 = s1 - v1, s2 - v2
    return s1 + s2 if n % 2 == 0 else s1 - s2


def detn2_partner(X: RectMatrix) -> RectMatrix:
    """The corner-swapped partner of a two-column matrix: replaces the (1,1)
    entry by D + x[n,2] and the (n,2) entry by -D + x[1,1], where D is the
    signed corner sum; has the same determinant as X."""
    if X.k != 2:
        raise ShapeError(f"expected two columns, got {X.k}")
    if X.n < 2:
        raise ShapeError("need at least two rows")
    n = X.n
    d = _corner_sums(X)
    rows = X.rows()
    rows[0] = [d + X.entry(n, 2), X.entry(1, 2)]
    rows[n - 1] = [X.entry(n, 1), -d + X.entry(1, 1)]
    return RectMatrix.from_rows(X.field, rows)


def verify_detn2_identity(X: RectMatrix) -> bool:
    """Check det(X) = det(partner of X) on a concrete two-column input."""
    return det(X) == det(detn2_partner(X))


def make_k2_counterexample(n: int, field: FieldSpec) -> LinearMapNK:
    """The two-column determinant preserver that swaps opposite corner cells
    through signed sums; not expressible as X -> A @ X @ B."""
    if n < 4:
        raise ShapeError(f"need at least 4 rows, got {n}")
    return LinearMapNK.from_function(field, n, 2, detn2_partner)


def make_singular_preserver(n: int, k: int, field: FieldSpec) -> LinearMapNK:
    """A noninvertible determinant preserver X -> X - x[1,1] * J, available
    exactly when n + k is odd (then the all-ones matrix J has vanishing
    interaction with every coefficient of det(V + t*J))."""
    if (n + k) % 2 == 0:
        raise ParityError(f"n + k = {n + k} must be odd")
    if k > n:
        raise ShapeError(f"{n}x{k}: need at least as many rows as columns")
    J = ones(field, n, k)

    def fn(X: RectMatrix) -> RectMatrix:
        return X - J.scale(X.entry(1, 1))

    return LinearMapNK.from_function(field, n, k, fn)


# -- radical ----------------------------------------------------------------------


def in_radical(W: RectMatrix) -> bool:
    """True when det(V + t*W) = det(V) holds identically in t for every V."""
    if W.k > W.n:
        raise ShapeError(f"{W.n}x{W.k}: need at least as many rows as columns")
    return max_deg_over_all_A(W) == 0


def radical_enumerate(n: int, k: int, p: int, budget: int | None = None) -> list[RectMatrix]:
    """All matrices over GF(p) lying in the radical of the determinant,
    enumerated in row-major lexicographic order."""
    from .fields import gf

    field = gf(p)
    total = p ** (n * k)
    limit = DEFAULT_SEARCH_BUDGET if budget is None else budget
    if total > limit:
        raise BudgetExceeded(f"{total} matrices exceeds budget {limit}")
    out = []
    for flat in product(range(p), repeat=n * k):
        W = RectMatrix(field, n, k, [field.element(x) for x in flat])
        if in_radical(W):
            out.append(W)
    return out


# -- factorisation ------------------------------------------------------------------


def factor_two_sided(T: LinearMapNK) -> tuple[RectMatrix, RectMatrix] | None:
    """Recover (A, B) with T(X) = A @ X @ B from the unit-matrix images, or
    None when the images do not form a consistent rank-one grid.

    A is normalised so the first nonzero entry of its first nonzero column
    is 1; the verified contract is action equality on every unit matrix.
    """
    n, k, field = T.n, T.k, T.field
    one = field.one
    M = [[T.apply(basis_matrix(field, n, k, i, j)) for j in range(1, k + 1)]
         for i in range(1, n + 1)]

    base = None
    for i in range(n):
        for j in range(k):
            if not M[i][j].is_zero():
                base = (i, j)
                break
        if base:
            break
    if base is None:
        return zeros(field, n, n), identity(field, k)

    i0, j0 = base
    M0 = M[i0][j0]
    r0, c0 = next(
        (r, c) for r in range(1, n + 1) for c in range(1, k + 1) if M0.entry(r, c).value
    )
    u = M0.column(c0)
    pivot_inv = u[r0 - 1].inverse()
    v = [M0.entry(r0, c) * pivot_inv for c in range(1, k + 1)]

    a_cols: list[list[Scalar] | None] = [None] * n
    b_rows: list[list[Scalar] | None] = [None] * k
    a_cols[i0] = u
    b_rows[j0] = v
    v_c0_inv = v[c0 - 1].inverse()
    for j in range(k):
        if j == j0:
            continue
        # row r0 of M[i0][j] determines b_j against the fixed u
        b_rows[j] = [M[i0][j].entry(r0, c) * pivot_inv for c in range(1, k + 1)]
    for i in range(n):
        if i == i0:
            continue
        a_cols[i] = [M[i][j0].entry(r, c0) * v_c0_inv for r in range(1, n + 1)]

    for i in range(n):
        for j in range(k):
            got = M[i][j]
            for r in range(n):
                ar = a_cols[i][r]
                for c in range(k):
                    if got.entry(r + 1, c + 1) != ar * b_rows[j][c]:
                        return None

    A = RectMatrix.from_columns(field, a_cols)
    B = RectMatrix.from_rows(field, b_rows)
    alpha = None
    for j in range(1, n + 1):
        col = A.column(j)
        nz = next((x for x in col if x.value), None)
        if nz is not None:
            alpha = nz
            break
    if alpha is not None and alpha != one:
        inv = alpha.inverse()
        A = A.scale(inv)
        B = B.scale(alpha)
    return A, B


# -- enumeration ---------------------------------------------------------------------


@dataclass(frozen=True)
class Census:
    """Exhaustive census of determinant preservers over a small field."""

    count: int
    maps: tuple[LinearMapNK, ...]


def enumerate_preservers(n: int, k: int, p: int, budget: int | None = None) -> Census:
    """Every linear map over GF(p) passing the exhaustive preservation check,
    iterated in row-major lexicographic matrix order."""
    from .fields import gf

    field = gf(p)
    nk = n * k
    space = p ** (nk * nk)
    limit = DEFAULT_SEARCH_BUDGET if budget is None else budget
    if space > limit:
        raise BudgetExceeded(f"{space} maps exceeds budget {limit}")

    dets: dict[tuple[int, ...], int] = {}
    for v in product(range(p), repeat=nk):
        X = unvec([field.element(x) for x in v], n, k, field)
        dets[v] = det(X).value
    vecs = list(dets.keys())

    found = []
    for flat in product(range(p), repeat=nk * nk):
        rows = [flat[r * nk : (r + 1) * nk] for r in range(nk)]
        ok = True
        for v in vecs:
            y = tuple(sum(r[c] * v[c] for c in range(nk) if v[c]) % p for r in rows)
            if dets[y] != dets[v]:
                ok = False
                break
        if ok:
            mat = RectMatrix.from_rows(field, [[field.element(x) for x in r] for r in rows])
            found.append(LinearMapNK(n, k, mat))
    return Census(len(found), tuple(found))


def check_k1_form(T: LinearMapNK) -> bool:
    """For single-column maps X -> A @ X: true when every column of A has
    alternating sum (-1)**(i-1), which characterises preservation."""
    if T.k != 1:
        raise ShapeError(f"map acts on width {T.k}, expected 1")
    A = T.mat
    n = T.n
    field = T.field
    for i in range(1, n + 1):
        acc = field.zero
        for r in range(1, n + 1):
            v = A.entry(r, i)
            acc = acc + v if r % 2 == 1 else acc - v
        want = field.one if i % 2 == 1 else -field.one
        if acc != want:
            return False
    return True
