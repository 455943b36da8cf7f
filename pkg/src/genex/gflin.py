"""Small dense linear algebra over prime fields GF(p).

Matrices are tuples of row tuples of ints in [0, p).  Only the handful of
operations the module-isomorphism test needs.
"""

from __future__ import annotations


def identity_matrix(n: int, p: int):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(A, B, p: int):
    n, m = len(A), len(B[0])
    k = len(B)
    return tuple(
        tuple(sum(A[i][t] * B[t][j] for t in range(k)) % p for j in range(m))
        for i in range(n))


def rref(A, p: int):
    """Reduced row echelon form and the pivot columns."""
    rows = [list(r) for r in A]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c] % p), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return tuple(tuple(row) for row in rows), pivots


def rank(A, p: int) -> int:
    return len(rref(A, p)[1])


def is_invertible(A, p: int) -> bool:
    return len(A) == len(A[0]) and rank(A, p) == len(A)


def nullspace(A, p: int):
    """Basis of the right nullspace {x : A x = 0}."""
    reduced, pivots = rref(A, p)
    n_cols = len(A[0])
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        vec = [0] * n_cols
        vec[f] = 1
        for r, c in enumerate(pivots):
            vec[c] = (-reduced[r][f]) % p
        basis.append(tuple(vec))
    return basis
