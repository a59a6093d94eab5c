import random
from fractions import Fraction

from hardlef import linalg


def F(x):
    return Fraction(x)


def M(rows):
    return [[Fraction(x) for x in row] for row in rows]


def test_rref_canonical():
    rows, pivots = linalg.rref(M([[2, 4, 0], [1, 2, 1]]), 3)
    assert pivots == [0, 2]
    assert rows == M([[1, 2, 0], [0, 0, 1]])


def test_rref_is_pivot_strategy_independent():
    mat = M([[3, 1, 0], [6, 2, 1], [0, 0, 5]])
    a = linalg.rref(mat, 3)[0]
    b = linalg.rref(list(reversed(mat)), 3)[0]
    assert a == b


def test_rank_and_row_space():
    mat = M([[1, 2], [2, 4], [0, 1]])
    assert linalg.rank(mat, 2) == 2
    assert linalg.row_space(M([[2, 4]]), 2) == M([[1, 2]])


def test_nullspace():
    mat = M([[1, 2, 3]])
    basis = linalg.nullspace(mat, 3)
    assert len(basis) == 2
    for v in basis:
        assert sum(c * x for c, x in zip(mat[0], v)) == 0


def test_left_kernel():
    mat = M([[1, 0], [2, 0], [0, 1]])
    ker = linalg.left_kernel(mat, 2)
    assert ker == M([[1, Fraction(-1, 2), 0]])


def test_left_kernel_empty_and_degenerate():
    assert linalg.left_kernel([], 3) == []
    full = linalg.left_kernel([[], []], 0)
    assert full == linalg.identity(2)


def test_express_in_rows():
    rows = M([[1, 0, 1], [0, 1, 1]])
    assert linalg.express_in_rows(rows, M([[2, 3, 5]])[0], 3) == [F(2), F(3)]
    assert linalg.express_in_rows(rows, M([[0, 0, 1]])[0], 3) is None
    assert linalg.express_in_rows([], [F(0)], 1) == []
    assert linalg.express_in_rows([], [F(1)], 1) is None


def test_inverse():
    mat = M([[1, 2], [3, 5]])
    inv = linalg.inverse(mat)
    assert linalg.matmul(mat, inv, 2) == linalg.identity(2)
    assert linalg.inverse(M([[1, 2], [2, 4]])) is None
    assert linalg.inverse([]) == []


def test_matmul_empty_dimensions():
    assert linalg.matmul([], M([[1]]), 1) == []
    assert linalg.matmul(M([[]]), [], 3) == [[F(0)] * 3]


def test_block_diag_and_negate():
    out = linalg.block_diag(M([[1]]), M([[2, 3]]), 1, 2)
    assert out == M([[1, 0, 0], [0, 2, 3]])
    assert linalg.negate(M([[1, -2]])) == M([[-1, 2]])


def test_reduce_mod_rows():
    rows, pivots = linalg.rref(M([[1, 0, 2], [0, 1, 3]]), 3)
    res = linalg.reduce_mod_rows(M([[2, 1, 7]])[0], rows, pivots)
    assert res == [F(0), F(0), F(0)]
    res = linalg.reduce_mod_rows(M([[0, 0, 1]])[0], rows, pivots)
    assert any(res)


def test_random_inverse_roundtrip():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(1, 5)
        mat = [[Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                for _ in range(n)] for _ in range(n)]
        inv = linalg.inverse(mat)
        if inv is None:
            assert linalg.rank(mat, n) < n
        else:
            assert linalg.matmul(mat, inv, n) == linalg.identity(n)
            assert linalg.matmul(inv, mat, n) == linalg.identity(n)
