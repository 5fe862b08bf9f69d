import random
from itertools import product

import pytest

from cullis import (
    RATIONALS,
    RectMatrix,
    ResourceGuard,
    ShapeError,
    basis_selector,
    det,
    det_definition,
    det_laplace,
    det_minorsum,
    det_product_rhs,
    gf,
    hjoin,
    k_subsets,
    ones,
    random_matrix,
    semicyclic_shift,
    zeros,
)
from oracles import oracle_det

Q = RATIONALS


def mat(rows, field=Q):
    return RectMatrix.from_rows(field, rows)


def test_square_case_is_ordinary_determinant():
    assert det_definition(mat([[1, 2], [3, 4]])).value == -2
    assert det_minorsum(mat([[1, 2], [3, 4]])).value == -2


def test_definition_examples():
    assert det_definition(mat([[1, 2], [3, 4], [5, 6]])).value == 0
    # columns that are distinct basis vectors give the subset sign
    assert det_definition(mat([[1, 0], [0, 1], [0, 0]])).value == 1
    assert det_definition(mat([[0, 1], [1, 0], [0, 0]])).value == -1


def test_laplace_examples():
    assert det_laplace(mat([[1], [2], [3]])).value == 2
    assert det_laplace(mat([[1, 2], [3, 4], [5, 6]]), 1).value == 0
    # expansion along a zero column vanishes
    X = mat([[0, 5], [0, 7], [0, 1]])
    assert det_laplace(X, 1).value == 0


def test_minorsum_examples():
    assert det_minorsum(mat([[1, 0], [0, 1], [0, 0]])).value == 1
    assert det_minorsum(mat([[1], [2], [3], [4]])).value == -2


def test_dispatcher_examples():
    assert det(mat([[1, 2], [3, 4], [5, 6]])).value == 0
    assert det(zeros(Q, 4, 2)).value == 0
    assert det(basis_selector(Q, 4, [2, 4])).value == -1  # subset sign of {2,4}
    assert det(basis_selector(Q, 4, [1, 2])).value == 1


def test_shape_guard():
    with pytest.raises(ShapeError):
        det(mat([[1, 2, 3], [4, 5, 6]]))
    with pytest.raises(ResourceGuard):
        det_definition(random_matrix(gf(5), 7, 4, random.Random(0)), budget=10)
    with pytest.raises(ResourceGuard):
        det_minorsum(random_matrix(gf(5), 7, 4, random.Random(0)), budget=10)


def test_exhaustive_agreement_gf2_3x2():
    F = gf(2)
    for flat in product(range(2), repeat=6):
        rows = [flat[0:2], flat[2:4], flat[4:6]]
        X = mat(rows, field=F)
        expected = oracle_det([list(r) for r in rows], p=2)
        for algo in (det_definition, det_minorsum, det):
            assert algo(X).value == expected
        for j in (1, 2):
            assert det_laplace(X, j).value == expected


def test_random_agreement_with_oracle():
    rng = random.Random(101)
    for _ in range(120):
        field = rng.choice([gf(5), gf(7), Q])
        n = rng.randrange(1, 8)
        k = rng.randrange(1, min(n, 4) + 1)
        X = random_matrix(field, n, k, rng)
        rows = [[e.value for e in X.row(i)] for i in range(1, n + 1)]
        want = oracle_det(rows, p=field.p if field.kind == "prime" else None)
        got = det_definition(X)
        assert got.value == want
        assert det_minorsum(X) == got and det(X) == got
        for j in range(1, k + 1):
            assert det_laplace(X, j) == got


def test_dispatcher_agrees_with_every_backend():
    rng = random.Random(202)
    for _ in range(1000):
        field = rng.choice([gf(5), gf(7), Q])
        n = rng.randrange(1, 8)
        k = rng.randrange(1, min(n, 4) + 1)
        X = random_matrix(field, n, k, rng)
        d = det(X)
        assert d == det_definition(X)
        assert d == det_minorsum(X)
        assert d == det_laplace(X, 1 + rng.randrange(k))


def test_basis_column_matrices_give_subset_sign():
    for n in range(1, 7):
        for k in range(1, min(n, 4) + 1):
            for c in k_subsets(n, k):
                assert det(basis_selector(gf(5), n, c.elems)).value == c.sign % 5


def test_product_expansion_example():
    X = mat([[1, 2], [3, 4], [5, 6]])
    Y = mat([[1], [1]])
    assert det_product_rhs(X, Y).value == 7
    assert det(X @ Y).value == 7


def test_product_expansion_identity_factor():
    rng = random.Random(5)
    X = random_matrix(gf(7), 5, 3, rng)
    I3 = RectMatrix.from_rows(gf(7), [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert det_product_rhs(X, I3) == det(X)


def test_product_expansion_random():
    rng = random.Random(6)
    for _ in range(60):
        field = rng.choice([gf(5), gf(7), Q])
        n = rng.randrange(2, 7)
        k = rng.randrange(1, min(n, 4) + 1)
        l = rng.randrange(1, k + 1)
        X = random_matrix(field, n, k, rng)
        Y = random_matrix(field, k, l, rng)
        assert det(X @ Y) == det_product_rhs(X, Y)


def test_right_multiplication_scaling():
    # a square factor of determinant zero kills the product
    X = mat([[1, 2], [3, 4], [5, 6]])
    Y = mat([[1, 1], [1, 1]])
    assert det(X @ Y).value == 0


def test_semicyclic_invariance():
    rng = random.Random(8)
    for (n, k) in [(4, 2), (5, 3), (6, 2)]:
        for _ in range(8):
            X = random_matrix(gf(7), n, k, rng)
            base = det(X)
            for i in range(1, n + 1):
                v = det(semicyclic_shift(X, i))
                if ((n - i) * k) % 2:
                    v = -v
                assert v == base


def test_ones_column_parity():
    rng = random.Random(9)
    for (n, k) in [(3, 1), (4, 1), (4, 2), (5, 2), (5, 3)]:
        col = ones(gf(7), n, 1)
        for _ in range(10):
            X = random_matrix(gf(7), n, k, rng)
            joined = det(hjoin(X, col))
            if (n + k) % 2:
                assert joined == det(X)
            else:
                assert joined.value == 0


def test_multilinearity_random():
    rng = random.Random(10)
    F = gf(7)
    for _ in range(40):
        n, k = 5, 3
        X = random_matrix(F, n, k, rng)
        u = [F.random_element(rng) for _ in range(n)]
        v = [F.random_element(rng) for _ in range(n)]
        a, b = F.random_element(rng), F.random_element(rng)
        j = rng.randrange(k)
        cols = X.columns()
        cu, cv, cm = list(cols), list(cols), list(cols)
        cu[j], cv[j] = u, v
        cm[j] = [a * x + b * y for x, y in zip(u, v)]
        assert det(RectMatrix.from_columns(F, cm)) == a * det(
            RectMatrix.from_columns(F, cu)
        ) + b * det(RectMatrix.from_columns(F, cv))
