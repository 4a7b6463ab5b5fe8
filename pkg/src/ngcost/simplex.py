"""Dense two-phase simplex for small equality-form linear programs.

Solves min c.x subject to A x = b, x >= 0.  Bland's rule picks both the
entering column (lowest index with negative reduced cost) and the
leaving row (lowest basic index among minimum ratios), which rules out
cycling and makes every pivot sequence reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

PIVOT_TOL = 1e-9
RATIO_TIE_TOL = 1e-12


class LpInfeasibleError(Exception):
    """The equality system has no nonnegative solution."""


class LpUnboundedError(Exception):
    """The objective decreases without bound over the feasible set."""


@dataclass(frozen=True)
class LinearProgram:
    """min c.x  s.t.  a_eq x = b_eq, x >= 0."""

    c: np.ndarray
    a_eq: np.ndarray
    b_eq: np.ndarray

    def __post_init__(self):
        c = np.array(self.c, dtype=float)
        a = np.array(self.a_eq, dtype=float)
        b = np.array(self.b_eq, dtype=float)
        if a.ndim != 2:
            raise ValueError(f"a_eq must be a matrix, got {a.ndim} axes")
        if c.ndim != 1 or c.shape[0] != a.shape[1]:
            raise ValueError(f"c has shape {c.shape}, expected ({a.shape[1]},)")
        if b.ndim != 1 or b.shape[0] != a.shape[0]:
            raise ValueError(f"b_eq has shape {b.shape}, expected ({a.shape[0]},)")
        if not (np.isfinite(c).all() and np.isfinite(a).all() and np.isfinite(b).all()):
            raise ValueError("linear program data must be finite")
        for name, arr in (("c", c), ("a_eq", a), ("b_eq", b)):
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)


def _pivot(tableau: np.ndarray, row: int, col: int) -> None:
    tableau[row] /= tableau[row, col]
    for r in range(tableau.shape[0]):
        if r != row and tableau[r, col] != 0.0:
            tableau[r] -= tableau[r, col] * tableau[row]


def _iterate(tableau: np.ndarray, basis: list[int], n_cols: int) -> None:
    n_rows = tableau.shape[0] - 1
    while True:
        enter = -1
        for j in range(n_cols):  # Bland: lowest eligible index
            if tableau[-1, j] < -PIVOT_TOL:
                enter = j
                break
        if enter < 0:
            return
        leave = -1
        best_ratio = 0.0
        for i in range(n_rows):
            coeff = tableau[i, enter]
            if coeff > PIVOT_TOL:
                ratio = tableau[i, -1] / coeff
                if (leave < 0 or ratio < best_ratio - RATIO_TIE_TOL or
                        (abs(ratio - best_ratio) <= RATIO_TIE_TOL and basis[i] < basis[leave])):
                    leave = i
                    best_ratio = ratio
        if leave < 0:
            raise LpUnboundedError("objective is unbounded below")
        _pivot(tableau, leave, enter)
        basis[leave] = enter


def solve(lp: LinearProgram) -> tuple[np.ndarray, float]:
    """Optimal vertex and objective value.

    Raises LpInfeasibleError when phase 1 cannot zero out the artificial
    variables and LpUnboundedError when phase 2 finds a descent ray.
    """
    a = np.array(lp.a_eq)
    b = np.array(lp.b_eq)
    c = np.array(lp.c)
    m, n = a.shape

    flip = b < 0
    a[flip] *= -1.0
    b[flip] *= -1.0

    # phase 1: minimize the sum of one artificial variable per row
    tableau = np.zeros((m + 1, n + m + 1))
    tableau[:m, :n] = a
    tableau[:m, n:n + m] = np.eye(m)
    tableau[:m, -1] = b
    tableau[m, :n] = -a.sum(axis=0)
    tableau[m, -1] = -b.sum()
    basis = list(range(n, n + m))
    _iterate(tableau, basis, n + m)
    if -tableau[m, -1] > PIVOT_TOL:
        raise LpInfeasibleError(
            f"no feasible point: artificial residual {-tableau[m, -1]!r}"
        )

    # pivot leftover artificials out; a row with no real pivot is redundant
    keep = []
    for i in range(m):
        if basis[i] >= n:
            enter = -1
            for j in range(n):
                if abs(tableau[i, j]) > PIVOT_TOL:
                    enter = j
                    break
            if enter < 0:
                continue
            _pivot(tableau, i, enter)
            basis[i] = enter
        keep.append(i)

    rows = len(keep)
    phase2 = np.zeros((rows + 1, n + 1))
    phase2[:rows, :n] = tableau[keep, :n]
    phase2[:rows, -1] = tableau[keep, -1]
    basis = [basis[i] for i in keep]
    phase2[rows, :n] = c
    for i, var in enumerate(basis):
        phase2[rows] -= c[var] * phase2[i]
    _iterate(phase2, basis, n)

    x = np.zeros(n)
    for i, var in enumerate(basis):
        x[var] = phase2[i, -1]
    np.clip(x, 0.0, None, out=x)  # scrub -1e-16 round-off
    return x, float(c @ x)
