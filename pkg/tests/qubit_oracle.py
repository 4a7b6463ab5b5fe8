"""Brute-force qubit oracle, independent of the package solvers.

Minimizes the expected cost of a finite 2x2x2x2 game over Schmidt-form
two-qubit states cos(g)|00> + sin(g)|11> and projective measurements in
the x-z plane.  Probabilities come from the closed form

    p(a, b | s, t) = (1 + (-1)^a mA + (-1)^b mB + (-1)^(a+b) E) / 4
    E  = cos(as) cos(bt) + sin(2g) sin(as) sin(bt)
    mA = cos(as) cos(2g),   mB = cos(bt) cos(2g)

where as/bt are the measurement angles.  A coarse grid scan is followed
by shrinking local grids around the best point.
"""

from __future__ import annotations

import numpy as np


def _cost_table(weights, gamma, alice0, alice1, bob0, bob1):
    """Expected cost for one gamma and broadcastable measurement-angle grids."""
    alice = (alice0[:, None, None, None], alice1[None, :, None, None])
    bob = (bob0[None, None, :, None], bob1[None, None, None, :])
    sin2g = np.sin(2.0 * gamma)
    cos2g = np.cos(2.0 * gamma)
    total = 0.0
    for s in range(2):
        ca, sa = np.cos(alice[s]), np.sin(alice[s])
        m_alice = ca * cos2g
        for t in range(2):
            cb, sb = np.cos(bob[t]), np.sin(bob[t])
            corr = ca * cb + sin2g * sa * sb
            m_bob = cb * cos2g
            for a in range(2):
                sign_a = 1.0 if a == 0 else -1.0
                for b in range(2):
                    sign_b = 1.0 if b == 0 else -1.0
                    p = (1.0 + sign_a * m_alice + sign_b * m_bob
                         + sign_a * sign_b * corr) / 4.0
                    total = total + weights[s, t, a, b] * p
    return total


def _scan(weights, gammas, alice0, alice1, bob0, bob1):
    best_value = np.inf
    best_point = None
    for gamma in gammas:
        table = _cost_table(weights, gamma, alice0, alice1, bob0, bob1)
        flat = int(np.argmin(table))
        value = float(table.flat[flat])
        if value < best_value:
            i, j, k, l = np.unravel_index(flat, table.shape)
            best_value = value
            best_point = (float(gamma), float(alice0[i]), float(alice1[j]),
                          float(bob0[k]), float(bob1[l]))
    return best_value, best_point


def qubit_grid_minimum(game, coarse: int = 21, rounds: int = 14) -> float:
    """Minimum cost over the real qubit strategy family described above."""
    cost = np.asarray(game.cost, dtype=float)
    if cost.shape != (2, 2, 2, 2) or not np.isfinite(cost).all():
        raise ValueError("oracle handles finite 2x2x2x2 games only")
    weights = np.asarray(game.input_dist, dtype=float)[:, :, None, None] * cost

    gammas = np.linspace(0.0, np.pi / 2, coarse)
    angles = np.linspace(0.0, 2.0 * np.pi, coarse, endpoint=False)
    value, point = _scan(weights, gammas, angles, angles, angles, angles)

    spans = [np.pi / 2 / (coarse - 1)] + [2.0 * np.pi / coarse] * 4
    for _ in range(rounds):
        spans = [s * 0.35 for s in spans]
        local = []
        for center, span in zip(point, spans):
            local.append(np.linspace(center - span, center + span, 9))
        gam = np.clip(local[0], 0.0, np.pi / 2)
        value, point = _scan(weights, gam, local[1], local[2], local[3], local[4])
    return value
