"""Exact classical game values by deterministic-strategy enumeration.

Shared randomness never helps a minimizer, so the classical optimum is
attained by a pair of deterministic response functions.  Enumerating all
n_a**n_s * n_b**n_t pairs therefore gives the exact classical cost.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .games import Game

ENUMERATION_LIMIT = 10**8


@dataclass(frozen=True)
class DeterministicStrategy:
    """Response functions alpha: s -> a and beta: t -> b, as tuples."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]


def strategy_cost(game: Game, strategy: DeterministicStrategy) -> float:
    """Average cost of a deterministic strategy; may be +inf.

    Inputs with zero weight contribute nothing even when they hit an
    infinite cost entry.
    """
    alpha, beta = strategy.alpha, strategy.beta
    if len(alpha) != game.n_s:
        raise ValueError(f"alpha has {len(alpha)} entries, expected {game.n_s}")
    if len(beta) != game.n_t:
        raise ValueError(f"beta has {len(beta)} entries, expected {game.n_t}")
    for s, a in enumerate(alpha):
        if not 0 <= a < game.n_a:
            raise ValueError(f"alpha[{s}]={a} outside answer alphabet of size {game.n_a}")
    for t, b in enumerate(beta):
        if not 0 <= b < game.n_b:
            raise ValueError(f"beta[{t}]={b} outside answer alphabet of size {game.n_b}")

    total = 0.0
    for s in range(game.n_s):
        for t in range(game.n_t):
            weight = game.input_dist[s, t]
            if weight == 0.0:
                continue
            c = game.cost[s, t, alpha[s], beta[t]]
            if math.isinf(c):
                return math.inf
            total += weight * c
    return float(total)


def classical_cost(game: Game) -> tuple[float, DeterministicStrategy]:
    """Exact classical minimum and the first strategy attaining it.

    Strategies are scanned in lexicographic order over (alpha, beta), so
    ties always resolve to the same witness.  Refuses games with more
    than 10**8 strategy pairs.
    """
    pairs = game.n_a ** game.n_s * game.n_b ** game.n_t
    if pairs > ENUMERATION_LIMIT:
        raise ValueError(
            f"{pairs} deterministic strategy pairs exceed the enumeration limit {ENUMERATION_LIMIT}"
        )
    best_cost = math.inf
    best = None
    for alpha in itertools.product(range(game.n_a), repeat=game.n_s):
        for beta in itertools.product(range(game.n_b), repeat=game.n_t):
            candidate = DeterministicStrategy(alpha, beta)
            cost = strategy_cost(game, candidate)
            if cost < best_cost or best is None:
                best_cost = cost
                best = candidate
    return best_cost, best
