import random
from fractions import Fraction

from superforms import linalg
from superforms.scalars import GaussScalar


def frac_matrix(rows):
    return [[Fraction(x) for x in r] for r in rows]


def test_rref_pivots():
    m = frac_matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    red, piv = linalg.rref(m)
    assert piv == [0, 1]
    assert linalg.rank(m) == 2


def test_nullspace_known():
    m = frac_matrix([[1, 2, 3], [2, 4, 6]])
    ns = linalg.nullspace(m)
    assert len(ns) == 2
    for v in ns:
        assert all(sum(r[j] * v[j] for j in range(3)) == 0 for r in m)


def test_solve_consistent_and_inconsistent():
    A = frac_matrix([[1, 1], [1, -1]])
    x = linalg.solve(A, [Fraction(2), Fraction(0)])
    assert x == [Fraction(1), Fraction(1)]
    B = frac_matrix([[1, 1], [2, 2]])
    assert linalg.solve(B, [Fraction(1), Fraction(3)]) is None


def test_inverse_and_det_random_gauss():
    rng = random.Random(11)
    for _ in range(15):
        n = rng.randint(1, 4)
        A = [
            [GaussScalar(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(n)]
            for _ in range(n)
        ]
        d = linalg.det(A)
        inv = linalg.inverse(A)
        if not d:
            assert inv is None
            continue
        ident = linalg.matmul(A, inv)
        for i in range(n):
            for j in range(n):
                assert ident[i][j] == (GaussScalar(1) if i == j else GaussScalar(0))


def test_det_multiplicative():
    rng = random.Random(5)
    for _ in range(10):
        n = 3
        A = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        B = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        assert linalg.det(linalg.matmul(A, B)) == linalg.det(A) * linalg.det(B)


def test_column_span_equal():
    a = frac_matrix([[1, 0], [0, 1]])
    b = frac_matrix([[1, 1], [1, -1]])
    assert linalg.column_span_equal(a, b)
    c = frac_matrix([[1, 0]])
    assert not linalg.column_span_equal(a, c)
