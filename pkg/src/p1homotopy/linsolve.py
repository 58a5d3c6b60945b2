"""Exact linear algebra over the integers for membership certificates.

solve_integer finds integer solutions of A x = b by unimodular column
reduction to echelon form (gcd pivoting, no fractions anywhere) followed by
forward substitution with divisibility checks; the reduction is shared
across right-hand sides.

feasible_mod_p is a sound pre-filter: elimination modulo a fixed prime small
enough for exact int64 arithmetic.  "No solution mod p" implies "no integer
solution"; the converse may fail, in which case the exact solver simply does
the work.
"""

from __future__ import annotations

import numpy as np

# Mersenne prime 2^31 - 1: products of two residues stay below 2^63.
FILTER_PRIME = 2147483647


def _echelon_transposed(a_rows, ncols):
    """Column echelon form of A via row ops on R = A^T.

    Returns (R, E, pivots) with R = E @ A^T, E unimodular, and pivots a list
    of (row_of_A, row_of_R) pairs in processing order.  After the sweep every
    non-pivot row of R is identically zero, so the pivot entries alone decide
    solvability.
    """
    m = len(a_rows)
    n = ncols
    R = [[a_rows[i][j] for i in range(m)] for j in range(n)]
    E = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    pivots = []
    r = 0
    for col in range(m):
        if r == n:
            break
        while True:
            live = [i for i in range(r, n) if R[i][col] != 0]
            if len(live) <= 1:
                break
            base = min(live, key=lambda i: abs(R[i][col]))
            bv = R[base][col]
            for i in live:
                if i == base:
                    continue
                q = R[i][col] // bv
                if q:
                    Ri, Rb = R[i], R[base]
                    R[i] = [x - q * y for x, y in zip(Ri, Rb)]
                    Ei, Eb = E[i], E[base]
                    E[i] = [x - q * y for x, y in zip(Ei, Eb)]
        live = [i for i in range(r, n) if R[i][col] != 0]
        if not live:
            continue
        i = live[0]
        if i != r:
            R[r], R[i] = R[i], R[r]
            E[r], E[i] = E[i], E[r]
        if R[r][col] < 0:
            R[r] = [-x for x in R[r]]
            E[r] = [-x for x in E[r]]
        pivots.append((col, r))
        r += 1
    return R, E, pivots


class IntegerSolver:
    """Reduces A once and answers A x = b for many right-hand sides."""

    def __init__(self, a_rows, ncols: int):
        self.a_rows = [list(r) for r in a_rows]
        self.ncols = ncols
        self.R, self.E, self.pivots = _echelon_transposed(self.a_rows, ncols)

    def solve(self, b):
        """An integer solution of A x = b, or None."""
        m = len(self.a_rows)
        residual = list(b)
        if len(residual) != m:
            raise ValueError("right-hand side has wrong length")
        y = [0] * self.ncols
        for k, (arow, _) in enumerate(self.pivots):
            piv = self.R[k][arow]
            v = residual[arow]
            if v % piv:
                return None
            yk = v // piv
            if yk:
                y[k] = yk
                Rk = self.R[k]
                for i in range(m):
                    residual[i] -= yk * Rk[i]
        if any(residual):
            return None
        x = [0] * self.ncols
        for k in range(len(self.pivots)):
            if y[k]:
                Ek = self.E[k]
                for i in range(self.ncols):
                    x[i] += y[k] * Ek[i]
        return x


def solve_integer(a_rows, b, ncols: int | None = None):
    """One-shot integer solve of A x = b (None when unsolvable over Z)."""
    if ncols is None:
        ncols = len(a_rows[0]) if a_rows else 0
    return IntegerSolver(a_rows, ncols).solve(b)


def feasible_mod_p(a_rows, rhs_list, p: int = FILTER_PRIME):
    """For each rhs: False = certainly unsolvable over Z, True = maybe."""
    m = len(a_rows)
    k = len(rhs_list)
    if m == 0:
        return [True] * k
    n = len(a_rows[0])
    aug = np.empty((m, n + k), dtype=np.int64)
    for i, row in enumerate(a_rows):
        aug[i, :n] = [v % p for v in row]
        aug[i, n:] = [rhs[i] % p for rhs in rhs_list]
    r = 0
    for col in range(n):
        if r == m:
            break
        nz = np.nonzero(aug[r:, col])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            aug[[r, pr]] = aug[[pr, r]]
        inv = pow(int(aug[r, col]), -1, p)
        aug[r] = (aug[r] * inv) % p
        others = np.nonzero(aug[:, col])[0]
        others = others[others != r]
        if others.size:
            aug[others] = (aug[others] - np.outer(aug[others, col], aug[r])) % p
        r += 1
    tail = aug[r:, n:]
    return [bool((tail[:, j] == 0).all()) for j in range(k)]
