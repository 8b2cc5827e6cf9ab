import random

import sympy as sp
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from palfkit.intmatrix import IntMatrix, cokernel_invariants, det, kernel_rank, smith_normal_form


def random_matrix(rng, max_dim=4, bound=5):
    nrows = rng.randrange(1, max_dim + 1)
    ncols = rng.randrange(1, max_dim + 1)
    return IntMatrix([[rng.randrange(-bound, bound + 1) for _ in range(ncols)] for _ in range(nrows)])


def test_identity_snf():
    d, u, v = smith_normal_form(IntMatrix.identity(3))
    assert d == IntMatrix.identity(3)
    assert u * IntMatrix.identity(3) * v == d


def test_zero_snf():
    d, u, v = smith_normal_form(IntMatrix([[0]]))
    assert d == IntMatrix([[0]])
    assert det(u) in (1, -1) and det(v) in (1, -1)


def test_family_boundary_matrix_snf():
    m = IntMatrix([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    d, u, v = smith_normal_form(m)
    assert d == IntMatrix.identity(3)
    assert u * m * v == d


def test_snf_properties_random():
    rng = random.Random(41)
    for _ in range(500):
        m = random_matrix(rng)
        d, u, v = smith_normal_form(m)
        # transforms are unimodular and exact
        assert det(u) in (1, -1)
        assert det(v) in (1, -1)
        assert u * m * v == d
        # diagonal, nonnegative, divisibility chain
        for i in range(d.nrows):
            for j in range(d.ncols):
                if i != j:
                    assert d[i, j] == 0
        diag = list(d.diagonal())
        assert all(x >= 0 for x in diag)
        nonzero = [x for x in diag if x]
        assert diag[:len(nonzero)] == nonzero  # zeros trail
        for a, b in zip(nonzero, nonzero[1:]):
            assert b % a == 0


def test_snf_matches_sympy():
    rng = random.Random(42)
    for _ in range(200):
        m = random_matrix(rng)
        d, _, _ = smith_normal_form(m)
        expected = sympy_snf(sp.Matrix([list(r) for r in m.rows]), domain=sp.ZZ)
        mine = sorted(abs(x) for x in d.diagonal() if x)
        theirs = sorted(abs(int(x)) for x in expected.diagonal() if x)
        assert mine == theirs


def test_det_against_sympy():
    rng = random.Random(43)
    for _ in range(200):
        n = rng.randrange(1, 5)
        m = IntMatrix([[rng.randrange(-6, 7) for _ in range(n)] for _ in range(n)])
        assert det(m) == int(sp.Matrix([list(r) for r in m.rows]).det())
    assert det(IntMatrix([], shape=(0, 0))) == 1


def test_cokernel_invariants():
    # Z^2 / <(2,0)> = Z + Z/2
    assert cokernel_invariants(IntMatrix([[2], [0]])) == (1, (2,))
    # Z^2 / identity = 0
    assert cokernel_invariants(IntMatrix.identity(2)) == (0, ())
    # no columns at all: everything survives
    assert cokernel_invariants(IntMatrix.zeros(3, 0)) == (3, ())


def test_kernel_rank():
    assert kernel_rank(IntMatrix.identity(3)) == 0
    assert kernel_rank(IntMatrix([[1, 1, 0], [0, 0, 0]])) == 2
    assert kernel_rank(IntMatrix.zeros(2, 3)) == 3


def test_from_columns_and_shape():
    m = IntMatrix.from_columns([(1, 0), (2, 3)], 2)
    assert m.rows == ((1, 2), (0, 3))
    assert m.column(1) == (2, 3)
    assert m.transpose().rows == ((1, 0), (2, 3))


def test_empty_dimensions():
    empty = IntMatrix.zeros(3, 0)
    assert empty.shape == (3, 0)
    d, u, v = smith_normal_form(empty)
    assert d.shape == (3, 0)
    assert u.shape == (3, 3) and v.shape == (0, 0)
    assert empty.transpose().shape == (0, 3)
