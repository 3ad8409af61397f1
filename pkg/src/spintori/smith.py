"""Smith normal form over the integers, with transformation witnesses.

``smith_normal_form`` diagonalizes an integer matrix A as P A Q = D
with unimodular P, Q and d1 | d2 | ... >= 0 on the diagonal.  The
witnesses are maintained through every elementary step, so the result
can always be re-verified by multiplication; ``SnfResult.verify`` does
exactly that.

``determinant`` is an independent fraction-free elimination, kept
deliberately separate from the SNF path so the two can cross-check
each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

Matrix = list[list[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with a*x + b*y == g >= 0.

    >>> xgcd(3, 2)
    (1, 1, -1)
    >>> xgcd(0, -5)
    (5, 0, -1)
    """
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_s, s = s, old_s - quo * s
        old_t, t = t, old_t - quo * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def determinant(a: Matrix) -> int:
    """Exact determinant by fraction-free elimination.

    >>> determinant([[10, 0], [0, 8]])
    80
    >>> determinant([[1, 2], [2, 4]])
    0
    """
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass
class SnfResult:
    """Diagonal form ``d`` with unimodular witnesses: p @ a @ q == d."""

    d: Matrix
    p: Matrix
    q: Matrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.d[i][i] for i in range(min(len(self.d), len(self.d[0]))))

    def verify(self, a: Matrix) -> bool:
        from .matrices import mat_mul

        return mat_mul(mat_mul(self.p, a), self.q) == self.d


def _swap_rows(d, p, i, j):
    d[i], d[j] = d[j], d[i]
    p[i], p[j] = p[j], p[i]


def _swap_cols(d, q, i, j):
    for row in d:
        row[i], row[j] = row[j], row[i]
    for row in q:
        row[i], row[j] = row[j], row[i]


def _add_row(d, p, i, j, f):
    # row_i += f * row_j
    d[i] = [x + f * y for x, y in zip(d[i], d[j])]
    p[i] = [x + f * y for x, y in zip(p[i], p[j])]


def _add_col(d, q, i, j, f):
    # col_i += f * col_j
    for row in d:
        row[i] += f * row[j]
    for row in q:
        row[i] += f * row[j]


def _mix_rows(d, p, i, j, x, y, u, v):
    # (row_i, row_j) <- (x row_i + y row_j, u row_i + v row_j); x v - y u = +-1
    di, dj = d[i], d[j]
    d[i] = [x * a + y * b for a, b in zip(di, dj)]
    d[j] = [u * a + v * b for a, b in zip(di, dj)]
    pi, pj = p[i], p[j]
    p[i] = [x * a + y * b for a, b in zip(pi, pj)]
    p[j] = [u * a + v * b for a, b in zip(pi, pj)]


def smith_normal_form(a: Matrix) -> SnfResult:
    """P A Q = D with d1 | d2 | ..., all diagonal entries >= 0.

    Deterministic: the pivot is the least |entry| in the working
    submatrix, row-major among ties.

    >>> smith_normal_form([[2, 1], [0, 2]]).diagonal
    (1, 4)
    >>> smith_normal_form([[10, 0], [0, 8]]).diagonal
    (2, 40)
    >>> smith_normal_form([[0, 0], [0, 0]]).diagonal
    (0, 0)
    """
    m, n = len(a), len(a[0])
    if any(len(row) != n for row in a):
        raise ValueError("ragged matrix")
    d = [row[:] for row in a]
    p = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    q = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    rank = 0
    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(d[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            _swap_rows(d, p, t, bi)
        if bj != t:
            _swap_cols(d, q, t, bj)
        while True:
            moved = False
            for i in range(t + 1, m):
                if d[i][t] == 0:
                    continue
                f = d[i][t] // d[t][t]
                if f:
                    _add_row(d, p, i, t, -f)
                if d[i][t]:
                    # remainder beats the pivot; promote it
                    _swap_rows(d, p, i, t)
                    moved = True
            if moved:
                continue
            for j in range(t + 1, n):
                if d[t][j] == 0:
                    continue
                f = d[t][j] // d[t][t]
                if f:
                    _add_col(d, q, j, t, -f)
                if d[t][j]:
                    _swap_cols(d, q, j, t)
                    moved = True
            if not moved:
                break
        rank = t + 1

    # divisibility repair: adjacent pairs until the chain holds
    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            di, dj = d[i][i], d[i + 1][i + 1]
            if dj % di == 0:
                continue
            changed = True
            j = i + 1
            _add_col(d, q, i, j, 1)  # makes d[j][i] = dj
            g, x, y = xgcd(di, dj)
            _mix_rows(d, p, i, j, x, y, -(dj // g), di // g)
            # clear the leftover d[i][j] = y * dj against the new pivot g
            _add_col(d, q, j, i, -(y * (dj // g)))

    for i in range(rank):
        if d[i][i] < 0:
            d[i] = [-x for x in d[i]]
            p[i] = [-x for x in p[i]]

    return SnfResult(d, p, q)


def invariant_factors(a: Matrix) -> tuple[int, ...]:
    """Nonzero diagonal of the Smith form, trivial factors included.

    >>> invariant_factors([[2, 1], [0, 2]])
    (1, 4)
    >>> invariant_factors([[0, 0], [0, 0]])
    ()
    """
    return tuple(x for x in smith_normal_form(a).diagonal if x)


@dataclass(frozen=True)
class AbelianInvariants:
    """Cokernel shape: nontrivial torsion factors plus the free rank."""

    torsion: tuple[int, ...]
    free_rank: int


def abelian_invariants(a: Matrix) -> AbelianInvariants:
    """
    >>> abelian_invariants([[2, 1], [0, 2]])
    AbelianInvariants(torsion=(4,), free_rank=0)
    >>> abelian_invariants([[0, 0], [0, 0]])
    AbelianInvariants(torsion=(), free_rank=2)
    """
    diag = smith_normal_form(a).diagonal
    cols = len(a[0])
    rank = sum(1 for x in diag if x)
    return AbelianInvariants(tuple(x for x in diag if x > 1), cols - rank)


# ---------------------------------------------------------------------------
# 2x2 diagonalization witnesses
#
# Four parametrized families of unimodular pairs (P, Q) that diagonalize
# specific 2x2 shapes; each is pinned by exact preconditions and each
# output is verifiable by multiplication.


def diagonalization_witnesses(case: str, a: int, b: int, c: int | None = None):
    """Return (A, B, P, Q) with P A Q == B and |det P| == |det Q| == 1.

    case "i":   gcd(a,b)=1,          A=diag(a,b)        -> B=diag(1,ab)
    case "ii":  gcd(a,b)=1,          A=[[a,1],[0,b]]    -> B=diag(1,ab)
    case "iii": gcd(a,b) | c,        A=[[a,c],[0,b]]    -> B=diag(a,b)
    case "iv":  gcd(a,b)=1, c odd,   A=[[2a,c],[0,2b]]  -> B=diag(1,4ab)

    >>> A, B, P, Q = diagonalization_witnesses("i", 3, 2)
    >>> P, Q
    ([[1, -1], [-2, 3]], [[1, 2], [1, 3]])
    """
    if case in ("i", "ii", "iv") and gcd(a, b) != 1:
        raise ValueError(f"case {case} needs coprime a, b")
    if case == "i":
        g, m, n = xgcd(a, b)
        A = [[a, 0], [0, b]]
        B = [[1, 0], [0, a * b]]
        P = [[1, n], [-b, a * m]]
        Q = [[m, -b * n], [1, a]]
    elif case == "ii":
        A = [[a, 1], [0, b]]
        B = [[1, 0], [0, a * b]]
        P = [[1, 0], [-b, 1]]
        Q = [[0, -1], [1, a]]
    elif case == "iii":
        if c is None:
            raise ValueError("case iii needs c")
        g = gcd(a, b)
        if g == 0 or c % g:
            raise ValueError("case iii needs gcd(a,b) dividing c")
        _, m, n = xgcd(a // g, b // g)
        z = c // g
        A = [[a, c], [0, b]]
        B = [[a, 0], [0, b]]
        P = [[1, -n * z], [0, 1]]
        Q = [[1, -m * z], [0, 1]]
    elif case == "iv":
        if c is None or c % 2 == 0:
            raise ValueError("case iv needs odd c")
        _, m, n = xgcd(a, b)
        h = (c - 1) // 2
        A = [[2 * a, c], [0, 2 * b]]
        B = [[1, 0], [0, 4 * a * b]]
        P = [[-1, n * h], [-2 * b, 1 + n * b * (c - 1)]]
        Q = [[m * h, -1 - m * a * (c - 1)], [-1, 2 * a]]
    else:
        raise ValueError(f"unknown case {case!r}")
    return A, B, P, Q
