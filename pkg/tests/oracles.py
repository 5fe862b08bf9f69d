"""Independent brute-force reference implementations used to pin expected
values.  Everything here works on plain lists of ints or Fractions and never
touches the package under test."""

from fractions import Fraction
from itertools import combinations, permutations


def oracle_subset_sign(elems):
    total = sum(e - pos for pos, e in enumerate(sorted(elems), start=1))
    return -1 if total % 2 else 1


def oracle_det(rows, p=None):
    """Injection-sum determinant; mod p when given, exact Fractions otherwise."""
    n, k = len(rows), len(rows[0])
    assert n >= k
    total = 0 if p else Fraction(0)
    for images in permutations(range(1, n + 1), k):
        inv = sum(
            1
            for a in range(k)
            for b in range(a + 1, k)
            if images[a] > images[b]
        )
        sign = (-1) ** inv * oracle_subset_sign(images)
        prod = 1 if p else Fraction(1)
        for j, i in enumerate(images):
            prod *= rows[i - 1][j]
        total += sign * prod
    return total % p if p else total


def oracle_square_det(rows, p=None):
    n = len(rows)
    total = 0 if p else Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(
            1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b]
        )
        prod = 1 if p else Fraction(1)
        for i in range(n):
            prod *= rows[i][perm[i]]
        total += (-1) ** inv * prod
    return total % p if p else total


def oracle_rank(rows, p=None):
    """Largest r admitting a nonzero r-by-r minor."""
    n, k = len(rows), len(rows[0])
    for r in range(min(n, k), 0, -1):
        for rsel in combinations(range(n), r):
            for csel in combinations(range(k), r):
                minor = [[rows[i][j] for j in csel] for i in rsel]
                if oracle_square_det(minor, p):
                    return r
    return 0
