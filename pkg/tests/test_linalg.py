import random
from fractions import Fraction

from relmilnor import linalg


def _mat(rows):
    return [[Fraction(x) for x in row] for row in rows]


def _random_matrix(rng, nrows, ncols, bound=5):
    return [
        [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(ncols)]
        for _ in range(nrows)
    ]


def test_rref_identity():
    reduced, pivots = linalg.rref(_mat([[2, 0], [0, 3]]))
    assert reduced == _mat([[1, 0], [0, 1]])
    assert pivots == [0, 1]


def test_rref_dependent_rows():
    reduced, pivots = linalg.rref(_mat([[1, 2], [2, 4], [3, 6]]))
    assert reduced == _mat([[1, 2]])
    assert pivots == [0]


def test_rank():
    assert linalg.rank(_mat([[1, 2, 3], [4, 5, 6], [7, 8, 9]])) == 2
    assert linalg.rank([]) == 0


def test_nullspace_kills_matrix():
    rng = random.Random(5)
    for _ in range(50):
        nrows, ncols = rng.randint(1, 5), rng.randint(1, 5)
        m = _random_matrix(rng, nrows, ncols)
        basis = linalg.nullspace(m, ncols)
        assert len(basis) == ncols - linalg.rank(m)
        for v in basis:
            for row in m:
                assert sum(a * b for a, b in zip(row, v)) == 0


def test_in_row_space():
    m = _mat([[1, 0, 1], [0, 1, 1]])
    reduced, pivots = linalg.rref(m)
    assert linalg.in_row_space(_mat([[2, 3, 5]])[0], reduced, pivots)
    assert not linalg.in_row_space(_mat([[0, 0, 1]])[0], reduced, pivots)


def test_solve_affine_unique():
    aug = _mat([[1, 1, 3], [1, -1, 1]])
    assert linalg.solve_affine(aug, 2) == [Fraction(2), Fraction(1)]


def test_solve_affine_inconsistent():
    aug = _mat([[1, 1, 1], [1, 1, 2]])
    assert linalg.solve_affine(aug, 2) == "inconsistent"


def test_solve_affine_underdetermined():
    aug = _mat([[1, 1, 1]])
    assert linalg.solve_affine(aug, 2) == "underdetermined"


def test_det():
    assert linalg.det(_mat([[1, 2], [3, 4]])) == -2
    assert linalg.det(_mat([[1, 2], [2, 4]])) == 0
    rng = random.Random(9)
    for _ in range(30):
        n = rng.randint(1, 4)
        a = _random_matrix(rng, n, n)
        b = _random_matrix(rng, n, n)
        ab = [
            [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
        assert linalg.det(ab) == linalg.det(a) * linalg.det(b)
