"""Integer matrix normal forms and linear Diophantine solving.

Matrices are plain lists of lists of Python ints (arbitrary precision).
Everything here is exact; nothing touches floating point.
"""

from __future__ import annotations

from typing import Optional, Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], inner: Optional[int] = None) -> Matrix:
    if inner is None:
        inner = len(B)
    ncols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(ncols)] for i in range(len(A))]


def matvec(A: Sequence[Sequence[int]], x: Sequence[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def transpose(A: Sequence[Sequence[int]], ncols: int) -> Matrix:
    return [[A[i][j] for i in range(len(A))] for j in range(ncols)]


def smith_normal_form(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form with unimodular transforms.

    Args:
      A: an m x n integer matrix.
      ncols: n, required when m == 0.

    Returns:
      (S, U, V) with U @ A @ V == S, U and V unimodular, S diagonal with
      non-negative entries s_0 | s_1 | ... and zeros trailing.
    """
    S, U, V, _ = smith_normal_form_full(A, ncols)
    return S, U, V


def smith_normal_form_full(
    A: Sequence[Sequence[int]], ncols: Optional[int] = None
) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """Like ``smith_normal_form`` but also returns V^-1."""
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    S = [list(row) for row in A]
    U = identity(m)
    V = identity(n)
    Vinv = identity(n)

    def swap_rows(i: int, j: int) -> None:
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i: int, j: int) -> None:
        for M in (S, V):
            for row in M:
                row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_row(dst: int, src: int, c: int) -> None:
        for M in (S, U):
            M[dst] = [a + c * b for a, b in zip(M[dst], M[src])]

    def add_col(dst: int, src: int, c: int) -> None:
        for M in (S, V):
            for row in M:
                row[dst] += c * row[src]
        Vinv[src] = [a - c * b for a, b in zip(Vinv[src], Vinv[dst])]

    for t in range(min(m, n)):
        nonzero = [(abs(S[i][j]), i, j) for i in range(t, m) for j in range(t, n) if S[i][j]]
        if not nonzero:
            break
        _, i0, j0 = min(nonzero)
        swap_rows(t, i0)
        swap_cols(t, j0)
        while True:
            p = S[t][t]
            moved = False
            for i in range(t + 1, m):
                if S[i][t]:
                    add_row(i, t, -(S[i][t] // p))
                    if S[i][t]:
                        swap_rows(t, i)
                        moved = True
                        break
            if moved:
                continue
            for j in range(t + 1, n):
                if S[t][j]:
                    add_col(j, t, -(S[t][j] // p))
                    if S[t][j]:
                        swap_cols(t, j)
                        moved = True
                        break
            if moved:
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if S[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if S[t][t] < 0:
            S[t] = [-a for a in S[t]]
            U[t] = [-a for a in U[t]]
    return S, U, V, Vinv


def diagonal(S: Matrix) -> list[int]:
    return [S[i][i] for i in range(min(len(S), len(S[0]) if S else 0))]


def hermite_rows(rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Row Hermite normal form of the lattice spanned by ``rows``.

    Returns the nonzero rows in echelon form: pivots positive, entries above
    each pivot reduced into [0, pivot). Two generating sets span the same
    lattice iff their outputs are equal.
    """
    A = [list(r) for r in rows if any(r)]
    r = 0
    for col in range(ncols):
        while True:
            nz = [i for i in range(r, len(A)) if A[i][col]]
            if not nz:
                break
            imin = min(nz, key=lambda i: abs(A[i][col]))
            A[r], A[imin] = A[imin], A[r]
            p = A[r][col]
            clean = True
            for i in range(r + 1, len(A)):
                if A[i][col]:
                    q = A[i][col] // p
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    if A[i][col]:
                        clean = False
            if clean:
                break
        if r < len(A) and A[r][col]:
            if A[r][col] < 0:
                A[r] = [-a for a in A[r]]
            p = A[r][col]
            for i in range(r):
                q = A[i][col] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
            r += 1
    return A[:r]


def solve_integer(A: Sequence[Sequence[int]], b: Sequence[int], ncols: Optional[int] = None) -> Optional[list[int]]:
    """One integer solution of A x = b, or None if there is none."""
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    S, U, V = smith_normal_form(A, n)
    c = matvec(U, b)
    y = [0] * n
    for i in range(m):
        s = S[i][i] if i < n else 0
        if s == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % s:
                return None
            y[i] = c[i] // s
    return matvec(V, y)


def integer_kernel(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Matrix:
    """A basis (as a list of vectors) of {x in Z^n : A x = 0}."""
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    S, _, V = smith_normal_form(A, n)
    rank = sum(1 for i in range(min(m, n)) if S[i][i])
    return [[V[i][j] for i in range(n)] for j in range(rank, n)]


def solve_congruences(
    A: Sequence[Sequence[int]], b: Sequence[int], moduli: Sequence[int], ncols: Optional[int] = None
) -> Optional[list[int]]:
    """One integer x with (A x)_i = b_i mod moduli_i for every row i.

    A modulus of 0 means exact equality.
    """
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    aug = [list(A[i]) + [moduli[i] if k == i else 0 for k in range(m)] for i in range(m)]
    sol = solve_integer(aug, b, n + m)
    return None if sol is None else sol[:n]
