"""Congruence normal form of skew-symmetric integer matrices.

skew_normal_form(S) produces a unimodular U with U^T S U block diagonal:
2x2 blocks [[0, k_i], [-k_i, 0]] with k_i > 0 in ascending order, followed
by a zero block when S is singular.  The algorithm pivots on a nonzero
entry of minimal magnitude and Euclidean-reduces its two rows against the
rest; every elementary column operation is mirrored as a row operation
(congruence) and accumulated into U.  Integer arithmetic throughout.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list  # list of list of int


def is_skew(S: Matrix) -> bool:
    n = len(S)
    return all(len(r) == n for r in S) and all(
        S[i][j] == -S[j][i] for i in range(n) for j in range(i, n)
    )


def _check_skew(S: Matrix):
    if not is_skew(S):
        raise ValueError("matrix is not skew-symmetric")


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    rows, inner, cols = len(A), len(B), len(B[0])
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        Ai = A[i]
        for k in range(inner):
            a = Ai[k]
            if a:
                Bk = B[k]
                Oi = out[i]
                for j in range(cols):
                    Oi[j] += a * Bk[j]
    return out


def transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)]


def det(A: Matrix) -> int:
    """Exact determinant by fraction-free Gaussian elimination."""
    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    sign = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if M[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            M[col], M[pivot] = M[pivot], M[col]
            sign = -sign
        for r in range(col + 1, n):
            if M[r][col]:
                f = M[r][col] / M[col][col]
                for c in range(col, n):
                    M[r][c] -= f * M[col][c]
    out = Fraction(sign)
    for i in range(n):
        out *= M[i][i]
    assert out.denominator == 1
    return int(out)


class _Worker:
    """Mutable congruence state: M = U^T S U is maintained as an invariant."""

    def __init__(self, S: Matrix):
        self.n = len(S)
        self.M = [list(r) for r in S]
        self.U = [[1 if i == j else 0 for j in range(self.n)] for i in range(self.n)]

    def swap(self, i: int, j: int):
        if i == j:
            return
        M, U = self.M, self.U
        for r in M:
            r[i], r[j] = r[j], r[i]
        M[i], M[j] = M[j], M[i]
        for r in U:
            r[i], r[j] = r[j], r[i]

    def addmul(self, src: int, dst: int, c: int):
        """col_dst += c * col_src, mirrored on rows; dst != src."""
        if c == 0:
            return
        M, U = self.M, self.U
        for r in M:
            r[dst] += c * r[src]
        Ms, Md = M[src], M[dst]
        for k in range(self.n):
            Md[k] += c * Ms[k]
        for r in U:
            r[dst] += c * r[src]


def _round_div(a: int, b: int) -> int:
    """Nearest-integer quotient, so |a - b*q| <= |b|/2."""
    q, r = divmod(a, b)
    if 2 * abs(r) > abs(b):
        q += 1
    return q


def skew_normal_form(S: Matrix) -> tuple[Matrix, Matrix]:
    """Return (U, D) with U unimodular and D = U^T S U in skew normal form."""
    _check_skew(S)
    w = _Worker(S)
    n = w.n
    pos = 0
    while pos + 1 < n:
        # minimal-magnitude nonzero pivot in the trailing submatrix
        pivot = None
        for i in range(pos, n):
            for j in range(i + 1, n):
                v = abs(w.M[i][j])
                if v and (pivot is None or v < pivot[0]):
                    pivot = (v, i, j)
        if pivot is None:
            break
        _, i, j = pivot
        w.swap(pos, i)  # j > i >= pos, so column j is untouched by this swap
        w.swap(pos + 1, j)
        # reduce rows pos and pos+1 against the trailing columns until clear
        while True:
            p = w.M[pos][pos + 1]
            for r in range(pos + 2, n):
                if w.M[pos + 1][r]:
                    w.addmul(pos, r, _round_div(w.M[pos + 1][r], p))
                if w.M[pos][r]:
                    w.addmul(pos + 1, r, -_round_div(w.M[pos][r], p))
            small = None
            for r in range(pos + 2, n):
                for row in (pos, pos + 1):
                    v = abs(w.M[row][r])
                    if v and (small is None or v < small[0]):
                        small = (v, row, r)
            if small is None:
                break
            _, row, r = small
            # strictly smaller remainder becomes the new pivot
            if row == pos:
                w.swap(pos + 1, r)
            else:
                w.swap(pos, r)
        if w.M[pos][pos + 1] < 0:
            w.swap(pos, pos + 1)
        pos += 2
    # sort the 2x2 blocks by ascending k
    blocks = list(range(0, pos, 2))
    for a in range(len(blocks)):
        for b in range(len(blocks) - 1 - a):
            i, j = blocks[b], blocks[b + 1]
            if w.M[i][i + 1] > w.M[j][j + 1]:
                w.swap(i, j)
                w.swap(i + 1, j + 1)
    return w.U, w.M


def quantum_plane_exponents(S: Matrix) -> list[int]:
    """Block parameters k_1..k_n of the normal form of a 2n x 2n matrix.

    Zero blocks contribute k = 0 (appended after the ascending nonzero
    parameters, mirroring the trailing zero block of the normal form).
    """
    if len(S) % 2:
        raise ValueError("quantum plane exponents need an even-dimensional matrix")
    _, D = skew_normal_form(S)
    out = []
    for i in range(0, len(S), 2):
        out.append(D[i][i + 1])
    return out


def check_congruence(S: Matrix, U: Matrix, D: Matrix) -> bool:
    """True iff U^T S U = D and |det U| = 1."""
    if len(S) != len(U) or len(U) != len(D):
        raise ValueError("dimension mismatch")
    if mat_mul(transpose(U), mat_mul(S, U)) != [list(r) for r in D]:
        return False
    return abs(det(U)) == 1


def is_normal_form(D: Matrix) -> bool:
    """Block diagonal with [[0,k],[-k,0]] blocks on the diagonal, then zeros."""
    n = len(D)
    ks = []
    pos = 0
    while pos + 1 < n and D[pos][pos + 1]:
        ks.append(D[pos][pos + 1])
        pos += 2
    R = [[0] * n for _ in range(n)]
    for b, k in enumerate(ks):
        R[2 * b][2 * b + 1] = k
        R[2 * b + 1][2 * b] = -k
    return R == [list(r) for r in D]


def read_matrix_file(path: str) -> Matrix:
    """First line the dimension, then dim whitespace-separated integer rows."""
    with open(path) as fh:
        tokens = fh.read().split()
    dim = int(tokens[0])
    vals = [int(t) for t in tokens[1:]]
    if len(vals) != dim * dim:
        raise ValueError(f"expected {dim * dim} entries, found {len(vals)}")
    return [vals[i * dim : (i + 1) * dim] for i in range(dim)]


def format_matrix(M: Matrix) -> str:
    widths = [max(len(str(M[i][j])) for i in range(len(M))) for j in range(len(M))]
    return "\n".join(
        " ".join(str(x).rjust(w) for x, w in zip(row, widths)) for row in M
    )
