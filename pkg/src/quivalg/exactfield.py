"""Exact linear algebra over a prime field F_p and over the integers.

Matrices over F_p are dense numpy int64 arrays with entries in [0, p);
row vectors act on the right of arrow matrices throughout the package.
Integer lattices are handled fraction-free (Bareiss for ranks, Hermite
form for membership), so no rational arithmetic ever appears.
"""

from __future__ import annotations

import numpy as np

DEFAULT_PRIME = 101


def as_matrix(m, rows: int | None = None, cols: int | None = None) -> np.ndarray:
    """Coerce to a 2-d int64 array, supplying a shape for empty input."""
    a = np.array(m, dtype=np.int64)
    if a.ndim != 2:
        if a.size == 0:
            a = a.reshape(rows if rows is not None else 0, cols if cols is not None else 0)
        else:
            raise ValueError(f"expected a 2-d matrix, got shape {a.shape}")
    return a


def mod_p(m: np.ndarray, p: int) -> np.ndarray:
    return np.mod(m, p)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Product mod p.  Entries stay below p**2 * cols, safe in int64 for desk sizes."""
    if a.shape[0] == 0 or b.shape[1] == 0 or a.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return np.mod(a @ b, p)


def rref(m, p: int, augment: np.ndarray | None = None):
    """Row-reduce over F_p.

    Args:
        m: matrix to reduce (not modified).
        p: prime modulus.
        augment: optional block carried along (same row count).

    Returns:
        (R, pivots, A) where R is the reduced row echelon form restricted to
        its nonzero rows, pivots is the list of pivot column indices and A is
        the transformed augment block (None when not supplied).
    """
    a = mod_p(as_matrix(m), p).copy()
    aug = None if augment is None else mod_p(as_matrix(augment), p).copy()
    nrows, ncols = a.shape
    row = 0
    pivots: list[int] = []
    for col in range(ncols):
        if row == nrows:
            break
        nz = np.nonzero(a[row:, col])[0]
        if nz.size == 0:
            continue
        pr = row + int(nz[0])
        if pr != row:
            a[[row, pr]] = a[[pr, row]]
            if aug is not None:
                aug[[row, pr]] = aug[[pr, row]]
        inv = pow(int(a[row, col]), p - 2, p)
        a[row] = (a[row] * inv) % p
        if aug is not None:
            aug[row] = (aug[row] * inv) % p
        factors = a[:, col].copy()
        factors[row] = 0
        hit = np.nonzero(factors)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(factors[hit], a[row])) % p
            if aug is not None:
                aug[hit] = (aug[hit] - np.outer(factors[hit], aug[row])) % p
        pivots.append(col)
        row += 1
    return a[: len(pivots)], pivots, aug


def rank_fp(m, p: int) -> int:
    """Rank of m over F_p."""
    _, pivots, _ = rref(m, p)
    return len(pivots)


def row_basis(m, p: int) -> np.ndarray:
    """Canonical (RREF) basis of the row space."""
    r, pivots, _ = rref(m, p)
    return r


def kernel_basis(m, p: int) -> np.ndarray:
    """Basis of {x : m @ x^T = 0}, one row per basis vector.

    Row count is cols(m) - rank(m); the basis is the canonical one obtained
    from the RREF free columns, so it is reproducible bit for bit.
    """
    a = as_matrix(m)
    ncols = a.shape[1]
    r, pivots, _ = rref(a, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = zeros(len(free), ncols)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for j, pc in enumerate(pivots):
            basis[i, pc] = (-int(r[j, fc])) % p
    return basis


def solve(a, b, p: int) -> np.ndarray | None:
    """Solve a @ x = b over F_p; returns one solution or None.

    b may be a matrix (each column solved simultaneously).
    """
    a = as_matrix(a)
    b = as_matrix(b, rows=a.shape[0])
    if b.shape[0] != a.shape[0]:
        raise ValueError("incompatible shapes in solve")
    r, pivots, aug = rref(a, p, augment=b)
    # rows of the eliminated system beyond rank must have zero rhs
    tail = aug[len(pivots):]
    if tail.size and np.any(tail % p):
        return None
    x = zeros(a.shape[1], b.shape[1])
    for j, pc in enumerate(pivots):
        x[pc] = aug[j]
    return x


def solve_left(x_rows, target_rows, p: int) -> np.ndarray | None:
    """Solve Y @ x_rows = target_rows over F_p (row-vector convention).

    Used to express rows of `target_rows` in terms of the rows of `x_rows`.
    """
    xt = as_matrix(x_rows).T
    tt = as_matrix(target_rows, cols=xt.shape[0]).T
    if tt.shape[0] != xt.shape[0]:
        raise ValueError("incompatible shapes in solve_left")
    y = solve(xt, tt, p)
    return None if y is None else y.T


def is_invertible(m, p: int) -> bool:
    a = as_matrix(m)
    return a.shape[0] == a.shape[1] and rank_fp(a, p) == a.shape[0]


def invert(m, p: int) -> np.ndarray | None:
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        return None
    x = solve(a, eye(a.shape[0]), p)
    if x is None:
        return None
    return x if np.array_equal(matmul(a, x, p), eye(a.shape[0])) else None


class RowSolver:
    """Factorized row-space membership/coordinate queries for a fixed basis.

    Given independent rows B, answers x = c @ B (or None) for many x cheaply.
    """

    def __init__(self, basis_rows: np.ndarray, p: int):
        self.p = p
        self.basis = as_matrix(basis_rows)
        n = self.basis.shape[0]
        r, pivots, transform = rref(self.basis, p, augment=eye(n))
        if len(pivots) != n:
            raise ValueError("basis rows are dependent")
        self.pivots = pivots
        # basis[:, pivots] @ transform.T? — transform satisfies R = U B with
        # R[:, pivots] = I, so coordinates of x are x[pivots] @ U.
        self.transform = transform[:n]

    def coordinates(self, vecs: np.ndarray) -> np.ndarray | None:
        """Coordinates of each row of vecs in the basis, or None if any falls outside."""
        v = mod_p(as_matrix(vecs, cols=self.basis.shape[1]), self.p)
        if not self.pivots:
            return None if v.any() else zeros(v.shape[0], 0)
        coords = matmul(v[:, self.pivots], self.transform, self.p)
        if not np.array_equal(matmul(coords, self.basis, self.p), v):
            return None
        return coords


# ---------------------------------------------------------------------------
# integer lattices


def lattice_rank(rows) -> int:
    """Rank over Q of the subgroup of Z^n generated by the rows.

    Fraction-free Bareiss elimination on python ints; row operations do not
    change the generated subgroup's rank.
    """
    mat = [[int(x) for x in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        pr = next((r for r in range(row, len(mat)) if mat[r][col]), None)
        if pr is None:
            continue
        mat[row], mat[pr] = mat[pr], mat[row]
        for r in range(row + 1, len(mat)):
            if not any(mat[r][col:]):
                continue
            lead = mat[r][col]
            piv = mat[row][col]
            for c in range(col, ncols):
                mat[r][c] = (piv * mat[r][c] - lead * mat[row][c]) // prev
        prev = mat[row][col]
        rank += 1
        row += 1
        if row == len(mat):
            break
    return rank


def hermite_basis(rows) -> list[list[int]]:
    """Row-style Hermite normal form basis of the lattice generated by rows."""
    mat = [[int(x) for x in row] for row in rows if any(row)]
    if not mat:
        return []
    ncols = len(mat[0])
    basis: list[list[int]] = []
    row = 0
    work = [r[:] for r in mat]
    for col in range(ncols):
        idx = [r for r in range(row, len(work)) if work[r][col]]
        if not idx:
            continue
        # euclidean reduction on the column
        while len(idx) > 1:
            idx.sort(key=lambda r: abs(work[r][col]))
            r0 = idx[0]
            for r in idx[1:]:
                q = work[r][col] // work[r0][col]
                if q:
                    for c in range(ncols):
                        work[r][c] -= q * work[r0][c]
            idx = [r for r in idx if work[r][col]]
        r0 = idx[0]
        work[row], work[r0] = work[r0], work[row]
        if work[row][col] < 0:
            work[row] = [-x for x in work[row]]
        basis.append(row)
        row += 1
        if row == len(work):
            break
    out = [work[r] for r in basis]
    # reduce above-pivot entries for a canonical form
    for i in range(len(out) - 1, -1, -1):
        piv_col = next(c for c in range(ncols) if out[i][c])
        for j in range(i):
            q = out[j][piv_col] // out[i][piv_col]
            if q:
                out[j] = [a - q * b for a, b in zip(out[j], out[i])]
    return out


def in_lattice(basis_rows, v) -> bool:
    """Whether integer vector v lies in the Z-span of basis_rows."""
    basis = hermite_basis(basis_rows)
    vec = [int(x) for x in v]
    for row in basis:
        piv = next((c for c in range(len(row)) if row[c]), None)
        if piv is None:
            continue
        if vec[piv] % row[piv] == 0:
            q = vec[piv] // row[piv]
            if q:
                vec = [a - q * b for a, b in zip(vec, row)]
    return not any(vec)
