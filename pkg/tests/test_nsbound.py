import math

import numpy as np
import pytest
from scipy.optimize import linprog

from ngcost import (
    Behavior,
    FamilyParams,
    Game,
    NonSignallingInfeasibleError,
    behavior_cost,
    behavior_of,
    chsh_optimal_strategy,
    classical_cost,
    evaluate_quantum_strategy,
    hardy_strategy,
    is_nonsignalling,
    make_chsh_game,
    make_family_game,
    make_hardy_game,
    ns_lower_bound,
)

INF = math.inf


def pr_box():
    p = np.zeros((2, 2, 2, 2))
    for s in range(2):
        for t in range(2):
            for a in range(2):
                for b in range(2):
                    if (a ^ b) == s * t:
                        p[s, t, a, b] = 0.5
    return Behavior(p)


def hardy_half_half(T=1.0):
    # zero-cost answers split half-half; avoids all three forbidden entries
    p = np.zeros((2, 2, 2, 2))
    for s, t in [(0, 0), (0, 1), (1, 0)]:
        p[s, t, 0, 0] = 0.5
        p[s, t, 1, 1] = 0.5
    p[1, 1, 0, 1] = 0.5
    p[1, 1, 1, 0] = 0.5
    return Behavior(p)


def test_pr_box_is_nonsignalling_and_free_on_chsh():
    box = pr_box()
    assert is_nonsignalling(box)
    assert behavior_cost(make_chsh_game(), box) == 0.0


def test_uniform_behavior_cost_on_chsh():
    uniform = Behavior(np.full((2, 2, 2, 2), 0.25))
    # each block holds two unit-cost entries at probability 1/4, weight 1/4
    assert behavior_cost(make_chsh_game(), uniform) == 0.5


def test_signalling_behavior_is_detected():
    p = np.zeros((2, 2, 2, 2))
    p[0, 0, 0, 0] = 1.0  # Alice outputs 0 when t = 0 ...
    p[0, 1, 1, 1] = 1.0  # ... but 1 when t = 1
    p[1, 0, 0, 0] = 1.0
    p[1, 1, 0, 0] = 1.0
    assert not is_nonsignalling(Behavior(p))


def test_quantum_behaviors_are_nonsignalling():
    for qs in (chsh_optimal_strategy(), hardy_strategy(0.6)):
        assert is_nonsignalling(behavior_of(qs))


def test_pr_box_is_the_optimal_hardy_behavior():
    # the PR box avoids all three forbidden entries and pays T/8 on block (0,0)
    assert behavior_cost(make_hardy_game(1.0), pr_box()) == 0.125


def test_behavior_cost_infinite_on_forbidden_mass():
    uniform = Behavior(np.full((2, 2, 2, 2), 0.25))
    assert behavior_cost(make_hardy_game(1.0), uniform) == INF


def test_ns_chsh_is_zero():
    value, witness = ns_lower_bound(make_chsh_game())
    assert abs(value) <= 1e-9
    assert value >= -1e-12
    assert is_nonsignalling(witness)
    assert abs(behavior_cost(make_chsh_game(), witness) - value) <= 1e-9


def test_ns_hardy_is_penalty_over_eight():
    game = make_hardy_game(1.0)
    value, witness = ns_lower_bound(game)
    assert abs(value - 0.125) <= 1e-9
    assert is_nonsignalling(witness)
    assert abs(behavior_cost(game, witness) - value) <= 1e-9
    # forced zeros are exact, not merely small
    assert witness.p[0, 1, 0, 1] == 0.0
    assert witness.p[1, 0, 1, 0] == 0.0
    assert witness.p[1, 1, 0, 0] == 0.0

    # the explicit half-half behavior is feasible and optimal
    explicit = hardy_half_half()
    assert is_nonsignalling(explicit)
    assert behavior_cost(game, explicit) == 0.125

    value2, _ = ns_lower_bound(make_hardy_game(2.0))
    assert abs(value2 - 0.25) <= 1e-9


def test_ns_zero_game():
    zero = Game(2, 2, 2, 2, np.full((2, 2), 0.25), np.zeros((2, 2, 2, 2)))
    value, witness = ns_lower_bound(zero)
    assert abs(value) <= 1e-12
    assert is_nonsignalling(witness)


def test_ns_is_a_lower_bound():
    games = [
        make_chsh_game(),
        make_hardy_game(1.0),
        make_family_game(FamilyParams(0.5, 0.8)),
        make_family_game(FamilyParams(1.2, 1.5)),
    ]
    rng = np.random.default_rng(41)
    for _ in range(4):
        cost = rng.uniform(0.0, 1.0, size=(2, 2, 2, 2))
        dist = rng.uniform(0.1, 1.0, size=(2, 2))
        dist /= dist.sum()
        games.append(Game(2, 2, 2, 2, dist, cost))
    for game in games:
        value, _ = ns_lower_bound(game)
        assert value <= classical_cost(game)[0] + 1e-9
    quantum = evaluate_quantum_strategy(make_chsh_game(), chsh_optimal_strategy())
    assert ns_lower_bound(make_chsh_game())[0] <= quantum + 1e-9


def test_ns_infeasible_when_block_fully_forbidden():
    cost = np.zeros((2, 2, 2, 2))
    cost[0, 0] = INF
    game = Game(2, 2, 2, 2, np.full((2, 2), 0.25), cost)
    with pytest.raises(NonSignallingInfeasibleError):
        ns_lower_bound(game)


def test_ns_infeasible_via_marginal_contradiction():
    # input (0,0) forbids a=0 entirely while input (0,1) forbids a=1,
    # so Alice's marginal cannot ignore Bob's input
    cost = np.zeros((2, 2, 2, 2))
    cost[0, 0, 0, :] = INF
    cost[0, 1, 1, :] = INF
    game = Game(2, 2, 2, 2, np.full((2, 2), 0.25), cost)
    with pytest.raises(NonSignallingInfeasibleError):
        ns_lower_bound(game)


def test_ns_deterministic_witness():
    first = ns_lower_bound(make_hardy_game(1.0))
    second = ns_lower_bound(make_hardy_game(1.0))
    assert first[0] == second[0]
    assert np.array_equal(first[1].p, second[1].p)


def _scipy_ns_value(game):
    """Independent LP assembly: scipy solves the same polytope problem."""
    n_s, n_t, n_a, n_b = game.n_s, game.n_t, game.n_a, game.n_b
    n_vars = n_s * n_t * n_a * n_b

    def idx(s, t, a, b):
        return ((s * n_t + t) * n_a + a) * n_b + b

    rows, rhs = [], []
    for s in range(n_s):
        for t in range(n_t):
            row = np.zeros(n_vars)
            row[[idx(s, t, a, b) for a in range(n_a) for b in range(n_b)]] = 1.0
            rows.append(row)
            rhs.append(1.0)
    for s in range(n_s):
        for a in range(n_a):
            for t in range(1, n_t):
                row = np.zeros(n_vars)
                for b in range(n_b):
                    row[idx(s, t, a, b)] += 1.0
                    row[idx(s, 0, a, b)] -= 1.0
                rows.append(row)
                rhs.append(0.0)
    for t in range(n_t):
        for b in range(n_b):
            for s in range(1, n_s):
                row = np.zeros(n_vars)
                for a in range(n_a):
                    row[idx(s, t, a, b)] += 1.0
                    row[idx(0, t, a, b)] -= 1.0
                rows.append(row)
                rhs.append(0.0)

    c = (game.input_dist[:, :, None, None]
         * np.where(np.isfinite(game.cost), game.cost, 0.0)).ravel()
    bounds = [(0.0, 0.0) if math.isinf(game.cost.flat[i]) else (0.0, None)
              for i in range(n_vars)]
    res = linprog(c, A_eq=np.array(rows), b_eq=np.array(rhs), bounds=bounds,
                  method="highs")
    assert res.status == 0
    return res.fun


def test_ns_matches_scipy_on_assorted_games():
    games = [
        make_chsh_game(),
        make_hardy_game(1.0),
        make_hardy_game(3.0),
        make_family_game(FamilyParams(0.4, 0.0)),
        make_family_game(FamilyParams(1.1, 2.5)),
    ]
    rng = np.random.default_rng(43)
    for _ in range(5):
        cost = rng.uniform(0.0, 2.0, size=(2, 2, 2, 2))
        dist = rng.uniform(0.05, 1.0, size=(2, 2))
        dist /= dist.sum()
        games.append(Game(2, 2, 2, 2, dist, cost))
    for game in games:
        ours, _ = ns_lower_bound(game)
        theirs = _scipy_ns_value(game)
        assert abs(ours - theirs) <= 1e-7
