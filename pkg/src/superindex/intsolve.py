"""Solving ``A x = b`` over the integers by unimodular column reduction."""

from __future__ import annotations


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g = gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def column_echelon(A: list[list[int]]) -> tuple[list[list[int]], list[list[int]], list[int]]:
    """Column-style Hermite reduction: returns ``(H, U, pivot_rows)`` with
    ``H = A U``, ``U`` unimodular, and ``H`` lower echelon; the k-th pivot
    column has its first nonzero entry in row ``pivot_rows[k]``."""
    m = len(A)
    n = len(A[0]) if m else 0
    H = [list(row) for row in A]
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    pivots: list[int] = []
    k = 0
    for r in range(m):
        if k == n:
            break
        for j in range(k + 1, n):
            b = H[r][j]
            if b == 0:
                continue
            a = H[r][k]
            g, s, t = _xgcd(a, b)
            ag, bg = a // g, b // g
            for M in (H, U):
                for row in M:
                    ck, cj = row[k], row[j]
                    row[k] = s * ck + t * cj
                    row[j] = -bg * ck + ag * cj
        if H[r][k] != 0:
            if H[r][k] < 0:
                for M in (H, U):
                    for row in M:
                        row[k] = -row[k]
            # Reduce earlier pivot-row entries to keep numbers small.
            for kk in range(k):
                f = H[r][kk] // H[r][k]
                if f:
                    for M in (H, U):
                        for row in M:
                            row[kk] -= f * row[k]
            pivots.append(r)
            k += 1
    return H, U, pivots


def solve_integer(A: list[list[int]], b: list[int]) -> list[int] | None:
    """One integer solution of ``A x = b`` or ``None`` when none exists."""
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return [0] * n
    H, U, pivots = column_echelon(A)
    y = [0] * n
    pivot_of = {r: k for k, r in enumerate(pivots)}
    for r in range(m):
        acc = b[r] - sum(H[r][j] * y[j] for j in range(len(pivots)) if H[r][j] and j != pivot_of.get(r))
        if r in pivot_of:
            k = pivot_of[r]
            if acc % H[r][k]:
                return None
            y[k] = acc // H[r][k]
        elif acc != 0:
            return None
    return [sum(U[i][j] * y[j] for j in range(n)) for i in range(n)]
