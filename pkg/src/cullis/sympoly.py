"""Sparse multivariate polynomial expansion of the determinant of a linear image.

Entries of X are numbered by their column-major position (0-based).  A
monomial is a tuple of (variable, exponent) pairs sorted by variable; a
polynomial is a dict from monomials to nonzero raw coefficients (residues for
GF(p), Fractions otherwise).  Raw coefficients keep the hot loops free of
wrapper objects; the public preserver API still speaks in scalars.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

from . import combinatorics as comb_mod
from .errors import BudgetExceeded
from .fields import FieldSpec

DEFAULT_TERM_GUARD = 200_000_000

Monomial = tuple[tuple[int, int], ...]
Poly = dict[Monomial, object]


def _mono_times_var(mono: Monomial, var: int) -> Monomial:
    out = []
    placed = False
    for v, e in mono:
        if v == var:
            out.append((v, e + 1))
            placed = True
        else:
            out.append((v, e))
    if not placed:
        out.append((var, 1))
        out.sort()
    return tuple(out)


def det_poly_identity(n: int, k: int, field: FieldSpec) -> Poly:
    """det(X) as a polynomial in the nk entry variables of X."""
    one = 1 if field.kind == "prime" else Fraction(1)
    p = field.p
    poly: Poly = {}
    for images in permutations(range(1, n + 1), k):
        s = comb_mod.perm_sign_of(images) * comb_mod.sgn_of_subset(sorted(images))
        mono = tuple(sorted(((i - 1) + j * n, 1) for j, i in enumerate(images)))
        coeff = one if s > 0 else -one
        if field.kind == "prime":
            coeff %= p
        poly[mono] = coeff
    return poly


def det_poly_of_map(mat_rows: list[list], n: int, k: int, field: FieldSpec,
                    guard: int | None = None) -> Poly:
    """det(T(X)) as a polynomial in X's entries, where T acts on the
    column-major flattening by the given (nk)x(nk) raw coefficient rows."""
    prime = field.kind == "prime"
    p = field.p
    limit = DEFAULT_TERM_GUARD if guard is None else guard
    cost = 0

    # linear form of entry (i, j) of T(X): nonzero picks from row (j-1)n+i-1
    forms: dict[tuple[int, int], list[tuple[int, object]]] = {}
    for j in range(1, k + 1):
        for i in range(1, n + 1):
            row = mat_rows[(j - 1) * n + (i - 1)]
            forms[(i, j)] = [(v, c) for v, c in enumerate(row) if c]

    one = 1 if prime else Fraction(1)
    total: Poly = {}
    for rows_sel in combinations(range(1, n + 1), k):
        sgn_c = comb_mod.sgn_of_subset(rows_sel)
        L = [[forms[(r, j)] for j in range(1, k + 1)] for r in rows_sel]
        # subset dynamic programming over which columns the first r rows used
        level: dict[int, Poly] = {0: {(): one}}
        for r in range(1, k + 1):
            nxt: dict[int, Poly] = {}
            for mask, sub in level.items():
                if not sub:
                    continue
                bits_before = 0
                for t in range(k):
                    bit = 1 << t
                    if mask & bit:
                        bits_before += 1
                        continue
                    form = L[r - 1][t]
                    if not form:
                        continue
                    # row r placed at column t: cofactor sign over the used set
                    neg = (r - 1 + bits_before) & 1
                    acc = nxt.setdefault(mask | bit, {})
                    cost += len(sub) * len(form)
                    if cost > limit:
                        raise BudgetExceeded(f"symbolic expansion beyond {limit} products")
                    for mono, cf in sub.items():
                        for var, a in form:
                            cc = cf * a
                            if neg:
                                cc = -cc
                            key = _mono_times_var(mono, var)
                            prev = acc.get(key)
                            acc[key] = cc if prev is None else prev + cc
            if prime:
                level = {m: {mo: c % p for mo, c in poly.items() if c % p}
                         for m, poly in nxt.items()}
            else:
                level = {m: {mo: c for mo, c in poly.items() if c}
                         for m, poly in nxt.items()}
        minor = level.get((1 << k) - 1, {})
        for mono, cf in minor.items():
            if sgn_c < 0:
                cf = -cf
            prev = total.get(mono)
            cf = cf if prev is None else prev + cf
            if prime:
                cf %= p
            if cf:
                total[mono] = cf
            elif prev is not None:
                del total[mono]
    return total
