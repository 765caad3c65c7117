"""Exact linear algebra over the rationals and the integers.

Matrices are lists of rows; entries are ``int`` or ``Fraction``.  Nothing here
uses floating point: every rank, solve and lattice test is exact.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Matrix = List[List[Fraction]]
Vector = Tuple[Fraction, ...]


def F(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vec(xs) -> Vector:
    return tuple(F(x) for x in xs)


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ValueError(f"length mismatch {len(u)} != {len(v)}")
    return sum((a * b for a, b in zip(u, v)), 0)


def add(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u: Sequence) -> tuple:
    return tuple(c * a for a in u)


def is_zero(u: Sequence) -> bool:
    return all(a == 0 for a in u)


def as_int_vector(u: Sequence) -> Optional[Tuple[int, ...]]:
    """Return ``u`` as a tuple of ints, or None when some entry is fractional."""
    out = []
    for a in u:
        a = F(a)
        if a.denominator != 1:
            return None
        out.append(int(a))
    return tuple(out)


def identity(n: int) -> List[List[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(M: Sequence[Sequence]) -> list:
    return [list(col) for col in zip(*M)] if M else []


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list:
    Bt = transpose(B)
    return [[dot(row, col) for col in Bt] for row in A]


def mat_vec(A: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(dot(row, v) for row in A)


def vec_mat(v: Sequence, A: Sequence[Sequence]) -> tuple:
    """Row vector times matrix."""
    if not A:
        return ()
    return tuple(sum((v[i] * A[i][j] for i in range(len(v))), 0) for j in range(len(A[0])))


def freeze(M: Sequence[Sequence]) -> Tuple[tuple, ...]:
    return tuple(tuple(row) for row in M)


def rref(M: Sequence[Sequence]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    A = [[F(x) for x in row] for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        A[r] = [x / piv for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def rank(M: Sequence[Sequence]) -> int:
    if not M:
        return 0
    return len(rref(M)[1])


def solve(A: Sequence[Sequence], b: Sequence) -> Optional[Vector]:
    """A particular solution of ``A x = b`` (free variables zero), or None."""
    if not A:
        return None if any(F(x) != 0 for x in b) else ()
    n = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, piv = rref(aug)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv):
        x[c] = R[i][n]
    return tuple(x)


def solve_combination(generators: Sequence[Sequence], target: Sequence) -> Optional[Vector]:
    """Coefficients c with ``sum c_i generators[i] == target``, or None."""
    if not generators:
        return () if is_zero(target) else None
    return solve(transpose(generators), target)


def inverse(M: Sequence[Sequence]) -> Matrix:
    n = len(M)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in R]


def determinant(M: Sequence[Sequence]) -> Fraction:
    A = [[F(x) for x in row] for row in M]
    n = len(A)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = -det
        det *= A[c][c]
        for i in range(c + 1, n):
            if A[i][c] != 0:
                f = A[i][c] / A[c][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return det


def nullspace(M: Sequence[Sequence], ncols: Optional[int] = None) -> List[Vector]:
    """Rational basis of ``{x : M x = 0}``."""
    if not M:
        n = ncols or 0
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    n = len(M[0])
    R, piv = rref(M)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for i, c in enumerate(piv):
            x[c] = -R[i][f]
        basis.append(tuple(x))
    return basis


# ---------------------------------------------------------------------------
# Integer lattices


def smith_normal_form(M: Sequence[Sequence[int]]):
    """Return ``(U, D, V)`` with ``U M V = D`` diagonal and U, V unimodular.

    The diagonal entries are nonnegative and each divides the next.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    A = [[int(x) for x in row] for row in M]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):  # row_dst += f * row_src
        A[dst] = [a + f * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + f * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, f):
        for row in A:
            row[dst] += f * row[src]
        for row in V:
            row[dst] += f * row[src]

    t = 0
    while t < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(i, t, -q)
                    if A[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(j, t, -q)
                    if A[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return U, A, V


def integer_solve(A: Sequence[Sequence[int]], b: Sequence) -> Optional[Tuple[int, ...]]:
    """An integer solution of ``A x = b`` or None when none exists."""
    m = len(A)
    n = len(A[0]) if m else 0
    bb = [F(x) for x in b]
    if any(x.denominator != 1 for x in bb):
        return None
    U, D, V = smith_normal_form(A)
    c = mat_vec(U, [int(x) for x in bb])
    y = [0] * n
    for i in range(m):
        d = D[i][i] if i < n else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d:
                return None
            y[i] = c[i] // d
    return tuple(int(x) for x in mat_vec(V, y))


def integer_kernel(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> List[Tuple[int, ...]]:
    """A Z-basis of the saturated lattice ``{x in Z^n : A x = 0}``."""
    if not A:
        n = ncols or 0
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    n = len(A[0])
    _, D, V = smith_normal_form(A)
    r = sum(1 for i in range(min(len(D), n)) if D[i][i] != 0)
    return [tuple(V[i][j] for i in range(n)) for j in range(r, n)]


def in_integer_span(generators: Sequence[Sequence[int]], target: Sequence) -> bool:
    if not generators:
        return is_zero(target)
    return integer_solve(transpose(generators), target) is not None
