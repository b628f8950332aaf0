import numpy as np

from quivalg import exactfield as ef


def test_rank_identity_and_zero():
    assert ef.rank_fp(np.eye(3, dtype=np.int64), 5) == 3
    assert ef.rank_fp(np.zeros((4, 2), dtype=np.int64), 5) == 0


def test_rank_dependent_rows():
    # second row is twice the first over F_5
    assert ef.rank_fp([[1, 2], [2, 4]], 5) == 1


def test_kernel_identity_and_zero():
    assert ef.kernel_basis(np.eye(2, dtype=np.int64), 5).shape == (0, 2)
    assert ef.kernel_basis(np.zeros((2, 3), dtype=np.int64), 5).shape == (3, 3)


def test_kernel_annihilates():
    m = np.array([[1, 1, 0]], dtype=np.int64)
    k = ef.kernel_basis(m, 5)
    assert k.shape[0] == 2
    assert not (m @ k.T % 5).any()


def test_solve_examples():
    b = np.array([[3], [4]], dtype=np.int64)
    x = ef.solve(np.eye(2, dtype=np.int64), b, 5)
    assert np.array_equal(x, b % 5)
    assert ef.solve(np.zeros((2, 2), dtype=np.int64), b, 5) is None
    x = ef.solve(np.array([[2]], dtype=np.int64), np.array([[1]], dtype=np.int64), 5)
    assert x[0, 0] == 3  # 2 * 3 = 6 = 1 mod 5


def test_rank_equals_transpose_rank():
    rng = np.random.default_rng(0)
    for _ in range(50):
        m = rng.integers(0, 101, size=(rng.integers(1, 7), rng.integers(1, 7)))
        assert ef.rank_fp(m, 101) == ef.rank_fp(m.T, 101)


def test_rank_plus_kernel_dimension():
    rng = np.random.default_rng(1)
    for _ in range(50):
        m = rng.integers(0, 101, size=(rng.integers(1, 7), rng.integers(1, 7)))
        assert m.shape[1] == ef.rank_fp(m, 101) + ef.kernel_basis(m, 101).shape[0]


def test_lattice_rank_examples():
    assert ef.lattice_rank([[1, 0], [0, 1]]) == 2
    assert ef.lattice_rank([[1, 1], [2, 2]]) == 1
    assert ef.lattice_rank([]) == 0


def test_lattice_rank_row_operation_invariance():
    rng = np.random.default_rng(2)
    for _ in range(200):
        rows = rng.integers(-5, 6, size=(rng.integers(1, 5), rng.integers(1, 5)))
        base = ef.lattice_rank(rows.tolist())
        mod = [list(r) for r in rows]
        if len(mod) >= 2:
            i, j = rng.integers(0, len(mod), size=2)
            if i != j:
                mod[i] = [a + b for a, b in zip(mod[i], mod[j])]
        k = rng.integers(0, len(mod))
        mod[k] = [-a for a in mod[k]]
        rng.shuffle(mod)
        assert ef.lattice_rank(mod) == base


def test_hermite_membership():
    basis = [[2, 0, 1], [0, 3, 1]]
    assert ef.in_lattice(basis, [2, 3, 2])
    assert ef.in_lattice(basis, [4, 0, 2])
    assert not ef.in_lattice(basis, [1, 0, 0])
    assert not ef.in_lattice(basis, [2, 3, 1])


def test_row_solver_coordinates():
    basis = np.array([[1, 2, 0], [0, 1, 1]], dtype=np.int64)
    rs = ef.RowSolver(basis, 7)
    coords = rs.coordinates(np.array([[1, 3, 1], [2, 4, 0]], dtype=np.int64))
    assert np.array_equal(coords % 7 @ basis % 7 % 7,
                          np.array([[1, 3, 1], [2, 4, 0]]) % 7)
    assert rs.coordinates(np.array([[0, 0, 5]], dtype=np.int64)) is None
