"""Dense exact linear algebra over prime fields, plus Smith normal form over Z.

Matrices over F_p are numpy int64 arrays with entries reduced mod p; the prime
travels alongside as an explicit argument.  Everything is dense on purpose:
the rest of the package works at desk scale (dimensions in the hundreds to low
thousands) where correctness and reproducibility beat asymptotics.

Pivoting is deterministic (first nonzero entry in column order), so every
construction downstream is reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("not invertible mod %d" % p)
    return pow(a, p - 2, p)


def asmatrix(A, p: int) -> np.ndarray:
    M = np.asarray(A, dtype=np.int64) % p
    if M.ndim != 2:
        raise ValueError("expected a 2-d array")
    return M


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    if A.shape[1] != B.shape[0]:
        raise ValueError("dimension mismatch %s @ %s" % (A.shape, B.shape))
    if A.shape[0] == 0 or B.shape[1] == 0 or A.shape[1] == 0:
        return zeros(A.shape[0], B.shape[1])
    # chunked to keep intermediate products inside int64
    return (A @ B) % p


def rref(A, p: int):
    """Reduced row-echelon form.

    Returns (R, rank, pivot_columns).  Deterministic: pivots are the first
    nonzero entries scanning columns left to right, rows top to bottom.
    """
    R = asmatrix(A, p).copy()
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = (R[r] * inv_mod(int(R[r, c]), p)) % p
        hit = np.nonzero(R[:, c])[0]
        hit = hit[hit != r]
        if hit.size:
            R[hit] = (R[hit] - np.outer(R[hit, c], R[r])) % p
        pivots.append(c)
        r += 1
    return R, r, tuple(pivots)


def rank(A, p: int) -> int:
    return rref(A, p)[1]


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_p^ambient, held as a reduced-echelon row basis."""

    p: int
    ambient: int
    basis: np.ndarray  # rows in RREF with distinct pivots

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def contains(self, v) -> bool:
        v = np.asarray(v, dtype=np.int64) % self.p
        return in_row_space(v, self.basis, self.p)

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.basis)


def row_space(A, p: int) -> np.ndarray:
    """RREF basis of the row space (zero rows dropped)."""
    R, r, _ = rref(A, p)
    return R[:r]


def in_row_space(v: np.ndarray, basis_rref: np.ndarray, p: int) -> bool:
    """Membership test against a basis already in RREF."""
    v = np.asarray(v, dtype=np.int64) % p
    for row in basis_rref:
        nz = np.nonzero(row)[0]
        if nz.size == 0:
            continue
        c = int(nz[0])
        if v[c]:
            v = (v - v[c] * row) % p
    return not v.any()


def nullspace(A, p: int) -> np.ndarray:
    """Rows form a canonical basis of the right kernel {x : A x = 0}."""
    A = asmatrix(A, p)
    rows, cols = A.shape
    R, r, pivots = rref(A, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = zeros(len(free), cols)
    for k, c in enumerate(free):
        basis[k, c] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-R[i, c]) % p
    return basis


def kernel_basis(A, p: int) -> Subspace:
    A = asmatrix(A, p)
    return Subspace(p, A.shape[1], row_space(nullspace(A, p), p))


def image_basis(A, p: int) -> Subspace:
    """Column space of A, as a subspace of F_p^rows."""
    A = asmatrix(A, p)
    return Subspace(p, A.shape[0], row_space(A.T, p))


def solve(A, b, p: int):
    """Some solution x of A x = b, or None.  Deterministic (free vars = 0)."""
    X = solve_matrix(A, np.asarray(b, dtype=np.int64).reshape(-1, 1), p)
    return None if X is None else X[:, 0]


def solve_matrix(A, B, p: int):
    """Solve A X = B columnwise; None if any column is unsolvable."""
    A = asmatrix(A, p)
    B = asmatrix(B, p)
    if A.shape[0] != B.shape[0]:
        raise ValueError("dimension mismatch")
    aug = np.hstack([A, B])
    R, _, pivots = rref(aug, p)
    ncols = A.shape[1]
    if any(c >= ncols for c in pivots):
        return None
    X = zeros(ncols, B.shape[1])
    for i, c in enumerate(pivots):
        X[c] = R[i, ncols:]
    return X


def solve_affine(A, b, p: int):
    """Full solution set of A x = b: (particular, nullspace rows) or None."""
    x0 = solve(A, b, p)
    if x0 is None:
        return None
    return x0, nullspace(A, p)


def inverse(A, p: int):
    A = asmatrix(A, p)
    n = A.shape[0]
    if A.shape[1] != n:
        return None
    X = solve_matrix(A, eye(n), p)
    if X is None or rank(A, p) != n:
        return None
    return X


def block_diag(blocks, p: int) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = zeros(rows, cols)
    r = c = 0
    for b in blocks:
        out[r : r + b.shape[0], c : c + b.shape[1]] = b % p
        r += b.shape[0]
        c += b.shape[1]
    return out


def quotient_maps(sub_rref: np.ndarray, ambient: int, p: int):
    """Projection/section pair for F_p^ambient / row-span(sub_rref).

    Returns (proj, sect): proj is q x ambient with kernel exactly the span,
    sect is ambient x q with proj @ sect = I_q.  Coordinates on the quotient
    are the non-pivot coordinates after reduction.
    """
    pivots = []
    for row in sub_rref:
        nz = np.nonzero(row)[0]
        if nz.size:
            pivots.append(int(nz[0]))
    free = [c for c in range(ambient) if c not in pivots]
    q = len(free)
    proj = zeros(q, ambient)
    for c in range(ambient):
        e = zeros(1, ambient)[0]
        e[c] = 1
        for row in sub_rref:
            nz = np.nonzero(row)[0]
            if nz.size and e[int(nz[0])]:
                e = (e - e[int(nz[0])] * row) % p
        for k, fc in enumerate(free):
            proj[k, c] = e[fc]
    sect = zeros(ambient, q)
    for k, c in enumerate(free):
        sect[c, k] = 1
    return proj, sect


# --- Smith normal form over Z (arbitrary precision) -------------------------


def smith_normal_form(A):
    """Smith normal form over Z with transforms.

    Returns (D, U, V) with U @ A @ V = D, U and V unimodular (products of
    elementary integer operations), D diagonal with d_i | d_{i+1} and
    d_i >= 0.  Pure-python integers throughout, so no overflow.
    """
    M = [[int(x) for x in row] for row in A]
    m = len(M)
    n = len(M[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in M:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        M[dst] = [a + c * b for a, b in zip(M[dst], M[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        for row in M:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    def negate_row(i):
        M[i] = [-a for a in M[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(m, n):
        # find the nonzero entry of least magnitude in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if M[i][j] != 0 and (best is None or abs(M[i][j]) < abs(M[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)
        if M[t][t] < 0:
            negate_row(t)
        dirty = False
        for i in range(t + 1, m):
            if M[i][t]:
                q = M[i][t] // M[t][t]
                add_row(i, t, -q)
                if M[i][t]:
                    dirty = True
        for j in range(t + 1, n):
            if M[t][j]:
                q = M[t][j] // M[t][t]
                add_col(j, t, -q)
                if M[t][j]:
                    dirty = True
        if dirty:
            continue
        # pivot divides the rest of the block?
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if M[i][j] % M[t][t]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            add_row(t, bad, 1)
            continue
        t += 1
    D = [[M[i][j] if i == j else 0 for j in range(n)] for i in range(m)]
    return D, U, V


def invariant_factors(A):
    """Nontrivial invariant factors (d_i > 1) of coker(Z^n --A--> Z^m rows).

    The input rows are relations among n generators; 0 entries in the output
    are free ranks and reported as 0s at the end.
    """
    M = [list(map(int, row)) for row in A]
    if not M:
        return []
    n = len(M[0])
    D, _, _ = smith_normal_form(M)
    diag = [D[i][i] for i in range(min(len(D), n))]
    facs = [d for d in diag if d not in (0, 1)]
    nzero = n - sum(1 for d in diag if d != 0)
    return facs + [0] * nzero
