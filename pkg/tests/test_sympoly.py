import random
from fractions import Fraction

from cullis import LinearMapNK, RATIONALS, det, gf, random_matrix, vec
from cullis.sympoly import det_poly_identity, det_poly_of_map


def eval_poly(poly, point, field):
    total = field.zero
    for mono, coeff in poly.items():
        term = field.element(coeff if isinstance(coeff, (int, Fraction)) else coeff)
        for var, exp in mono:
            for _ in range(exp):
                term = term * point[var]
        total = total + term
    return total


def test_identity_map_expansion_matches_plain_determinant():
    for field in (gf(5), RATIONALS):
        for (n, k) in [(3, 2), (4, 2), (4, 3)]:
            T = LinearMapNK.identity_map(field, n, k)
            rows = [[e.value for e in T.mat.row(i)] for i in range(1, n * k + 1)]
            assert det_poly_of_map(rows, n, k, field) == det_poly_identity(n, k, field)


def test_identity_polynomial_term_count():
    poly = det_poly_identity(4, 2, gf(5))
    assert len(poly) == 12  # injections of a pair into four rows
    assert all(len(mono) == 2 for mono in poly)


def test_map_expansion_agrees_with_pointwise_evaluation():
    rng = random.Random(33)
    for field in (gf(7), RATIONALS):
        for _ in range(6):
            n, k = 4, 2
            T = LinearMapNK(n, k, random_matrix(field, n * k, n * k, rng))
            rows = [[e.value for e in T.mat.row(i)] for i in range(1, n * k + 1)]
            poly = det_poly_of_map(rows, n, k, field)
            for _ in range(4):
                X = random_matrix(field, n, k, rng)
                point = list(vec(X))
                assert eval_poly(poly, point, field) == det(T.apply(X))


def test_cancellation_prunes_zero_coefficients():
    F = gf(3)
    # X -> X + X has coefficient 2 everywhere; X -> 3X collapses to zero map
    tripled = LinearMapNK.identity_map(F, 3, 2).mat.scale(3)
    rows = [[e.value for e in tripled.row(i)] for i in range(1, 7)]
    assert det_poly_of_map(rows, 3, 2, F) == {}
