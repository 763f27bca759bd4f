"""Exact integer linear algebra on small dense matrices.

Everything here works on plain lists of Python ints, so intermediate
values may grow without overflow.  Matrices are lists of rows.
"""

from __future__ import annotations


def eye(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(A, B):
    rows = len(A)
    inner = len(B)
    cols = len(B[0]) if inner else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(rows)]


def matvec(A, v):
    return [sum(row[k] * v[k] for k in range(len(v))) for row in A]


def smith_normal_form(A):
    """Diagonalize A over the integers.

    Returns (U, S, V) with U*A*V == S, U and V unimodular, and S diagonal
    with nonnegative entries satisfying S[0][0] | S[1][1] | ...
    """
    m = len(A)
    n = len(A[0]) if m else 0
    S = [list(map(int, row)) for row in A]
    U = eye(m)
    V = eye(n)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def addmul_row(dst, src, q):
        Sd, Ss = S[dst], S[src]
        for k in range(n):
            Sd[k] += q * Ss[k]
        Ud, Us = U[dst], U[src]
        for k in range(m):
            Ud[k] += q * Us[k]

    def addmul_col(dst, src, q):
        for row in S:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                v = S[i][j]
                if v and (piv is None or abs(v) < abs(S[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            dirty = False
            for i in range(t + 1, m):
                if S[i][t]:
                    q = S[i][t] // S[t][t]
                    addmul_row(i, t, -q)
                    if S[i][t]:
                        # remainder is smaller than the pivot; promote it
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if S[t][j]:
                    q = S[t][j] // S[t][t]
                    addmul_col(j, t, -q)
                    if S[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            bad = None
            for i in range(t + 1, m):
                if any(S[i][j] % S[t][t] for j in range(t + 1, n)):
                    bad = i
                    break
            if bad is None:
                break
            # fold the offending row in so the pivot can shrink to the gcd
            addmul_row(t, bad, 1)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, S, V


def snf_diagonal(A):
    _, S, _ = smith_normal_form(A)
    m = len(S)
    n = len(S[0]) if m else 0
    return [S[i][i] for i in range(min(m, n))]


def invariant_factors(A):
    """Invariant factors (> 1) of the cokernel Z^m / col-span(A)."""
    return [d for d in snf_diagonal(A) if d > 1]


def solve(A, b):
    """One integer solution x of A x = b, or None if none exists."""
    m = len(A)
    n = len(A[0]) if m else 0
    U, S, V = smith_normal_form(A)
    c = matvec(U, b)
    y = [0] * n
    for i in range(m):
        s = S[i][i] if i < n else 0
        if s:
            if c[i] % s:
                return None
            y[i] = c[i] // s
        elif c[i]:
            return None
    return matvec(V, y)


def kernel_basis(A):
    """Basis (list of vectors) of the integer kernel {x : A x = 0}."""
    m = len(A)
    n = len(A[0]) if m else 0
    _, S, V = smith_normal_form(A)
    basis = []
    for j in range(n):
        if j >= m or S[j][j] == 0:
            basis.append([V[i][j] for i in range(n)])
    return basis


def column_lattice_basis(A):
    """Basis of the lattice spanned by the columns of A, as a list of columns."""
    m = len(A)
    if m == 0:
        return []
    active = [list(col) for col in zip(*A)]
    basis = []
    for r in range(m):
        while True:
            nz = [c for c in active if c[r]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda c: abs(c[r]))
            p = nz[0]
            for c in nz[1:]:
                q = c[r] // p[r]
                for i in range(m):
                    c[i] -= q * p[i]
        piv = next((c for c in active if c[r]), None)
        if piv is not None:
            basis.append(piv)
            active = [c for c in active if c is not piv and any(c)]
        else:
            active = [c for c in active if any(c)]
    return basis


def lattice_quotient_invariants(sup_cols, sub_cols):
    """Invariant factors (> 1) of L1/L2 for lattices given by generating columns.

    Requires L2 <= L1 and a finite quotient; raises ValueError otherwise.
    """
    if sup_cols:
        dim = len(sup_cols[0])
        mat = [[col[i] for col in sup_cols] for i in range(dim)]
        basis = column_lattice_basis(mat)
    else:
        basis = []
    r = len(basis)
    if r == 0:
        if any(any(c) for c in sub_cols):
            raise ValueError("generators do not lie in the ambient lattice")
        return []
    dim = len(basis[0])
    B = [[basis[j][i] for j in range(r)] for i in range(dim)]
    coords = []
    for col in sub_cols:
        x = solve(B, list(col))
        if x is None:
            raise ValueError("not a sublattice: generator outside the big lattice")
        coords.append(x)
    X = [[coords[j][i] for j in range(len(coords))] for i in range(r)]
    diag = snf_diagonal(X)
    nonzero = [d for d in diag if d]
    if len(nonzero) < r:
        raise ValueError("quotient is infinite")
    return [d for d in nonzero if d > 1]


def det(A):
    """Exact determinant of a square integer matrix (Bareiss)."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(map(int, row)) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]
