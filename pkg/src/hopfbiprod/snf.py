"""Smith normal form over the integers with unimodular transforms.

All arithmetic is done on Python integers, so results are exact regardless of
entry size.  Matrices are returned as ``numpy`` arrays of ``dtype=object``.
"""

from __future__ import annotations

import numpy as np


def _as_rows(M) -> list:
    a = np.asarray(M, dtype=object)
    if a.ndim != 2:
        raise ValueError("expected a 2-d integer matrix")
    return [[int(x) for x in row] for row in a.tolist()], a.shape


def _eye(n: int) -> list:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M):
    """Return ``(U, S, V)`` with ``U @ M @ V == S``.

    ``U`` and ``V`` are unimodular, ``S`` is diagonal with non-negative entries
    ``d1 | d2 | ...`` followed by zeros.

    >>> U, S, V = smith_normal_form([[2, 0], [0, 3]])
    >>> S.tolist()
    [[1, 0], [0, 6]]
    """
    A, (m, n) = _as_rows(M)
    U = _eye(m)
    V = _eye(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row dst += k * row src
        A[dst] = [a + k * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, k):  # col dst += k * col src
        for row in A:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    def negate_row(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]

    for t in range(min(m, n)):
        # move the smallest non-zero entry of the trailing block to (t, t)
        while True:
            pivots = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
            if not pivots:
                break
            _, pi, pj = min(pivots)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    add_row(t, i, -q)
                clean &= A[i][t] == 0
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    add_col(t, j, -q)
                clean &= A[t][j] == 0
            if not clean:
                continue
            # divisibility: the pivot must divide the whole trailing block
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if A[t][t] < 0:
            negate_row(t)

    return (
        np.array(U, dtype=object).reshape(m, m),
        np.array(A, dtype=object).reshape(m, n),
        np.array(V, dtype=object).reshape(n, n),
    )


def invariant_factors(M) -> list:
    """Non-zero diagonal entries of the Smith normal form of ``M``."""
    _, S, _ = smith_normal_form(M)
    return [int(S[i, i]) for i in range(min(S.shape)) if S[i, i] != 0]


def is_smith_normal_form(S) -> bool:
    S = np.asarray(S, dtype=object)
    m, n = S.shape
    for i in range(m):
        for j in range(n):
            if i != j and S[i, j] != 0:
                return False
    diag = [int(S[i, i]) for i in range(min(m, n))]
    if any(d < 0 for d in diag):
        return False
    for a, b in zip(diag, diag[1:]):
        if a == 0 and b != 0:
            return False
        if a != 0 and b % a:
            return False
    return True


def canonical_orders(orders) -> tuple:
    """Invariant-factor form of ``Z/d1 + Z/d2 + ...`` (``0`` meaning Z).

    Trivial factors are dropped and free factors come last, e.g.
    ``(2, 3, 0)`` becomes ``(6, 0)``.
    """
    orders = [int(o) for o in orders]
    k = len(orders)
    relations = [[orders[i] if i == j else 0 for j in range(k)] for i in range(k)]
    if k == 0:
        return ()
    _, S, _ = smith_normal_form(relations)
    diag = [int(S[i, i]) for i in range(k)]
    torsion = [d for d in diag if d > 1]
    free = [0] * sum(1 for d in diag if d == 0)
    return tuple(torsion + free)
