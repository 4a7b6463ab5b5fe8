"""See-saw minimization of quantum game cost with random restarts.

Each round alternates three exact subproblems: best binary POVMs for
Alice given the state and Bob, best for Bob given the state and Alice,
then the minimum-eigenvalue state of the resulting game operator.  Every
step solves its subproblem exactly, so the cost trace never increases
and the final value is a valid quantum upper bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .games import Game
from .linalg import herm_eig, kron, partial_trace_a, partial_trace_b
from .quantum import QuantumStrategy

NEGATIVE_EIG_TOL = 1e-12


@dataclass(frozen=True)
class SeesawConfig:
    """Knobs for the restart loop; defaults suit 2x2x2x2 games."""

    d_a: int = 2
    d_b: int = 2
    restarts: int = 32
    max_iters: int = 500
    tol: float = 1e-9
    seed: int = 0

    def __post_init__(self):
        if self.d_a < 1 or self.d_b < 1:
            raise ValueError(f"local dimensions must be positive, got ({self.d_a}, {self.d_b})")
        if self.restarts < 1:
            raise ValueError(f"restarts must be at least 1, got {self.restarts}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be at least 1, got {self.max_iters}")
        if not (self.tol > 0):
            raise ValueError(f"tol must be positive, got {self.tol}")


@dataclass(frozen=True)
class SeesawReport:
    """Best value found, the strategy attaining it, and per-restart traces."""

    best_cost: float
    best_strategy: QuantumStrategy
    traces: tuple[tuple[float, ...], ...] = field(repr=False)

    @property
    def restarts(self) -> int:
        return len(self.traces)


def _require_finite(game: Game) -> None:
    if game.has_infinite_costs():
        raise ValueError("game has infinite costs; cap them before running the see-saw")


def _weights(game: Game) -> np.ndarray:
    return game.input_dist[:, :, None, None] * game.cost


def game_operator(game: Game, alice_povms, bob_povms) -> np.ndarray:
    """Operator whose expectation on |psi> is the expected cost.

    G = sum_{s,t,a,b} pi(s,t) C(a,b|s,t) A^s_a x B^t_b, returned as a
    dense (dA*dB) x (dA*dB) Hermitian matrix.
    """
    _require_finite(game)
    A = np.asarray(alice_povms, dtype=complex)
    B = np.asarray(bob_povms, dtype=complex)
    if A.ndim != 4 or A.shape[:2] != (game.n_s, game.n_a):
        raise ValueError(
            f"alice POVMs have shape {A.shape}, expected ({game.n_s},{game.n_a},d,d)"
        )
    if B.ndim != 4 or B.shape[:2] != (game.n_t, game.n_b):
        raise ValueError(
            f"bob POVMs have shape {B.shape}, expected ({game.n_t},{game.n_b},d,d)"
        )
    d_a, d_b = A.shape[2], B.shape[2]
    G = np.einsum("stab,saij,tbkl->ikjl", _weights(game), A, B, optimize=True)
    return G.reshape(d_a * d_b, d_a * d_b)


def optimal_state(game: Game, alice_povms, bob_povms) -> tuple[np.ndarray, float]:
    """Minimum-eigenvalue state of the game operator and its cost."""
    w, v = herm_eig(game_operator(game, alice_povms, bob_povms))
    return v[:, 0].copy(), float(w[0])


def _binary_split(delta: np.ndarray, dim: int) -> tuple[np.ndarray, np.ndarray]:
    # outcome 0 collects the strictly negative eigenspace; zero modes go to 1
    w, v = herm_eig(delta)
    neg = v[:, w < -NEGATIVE_EIG_TOL]
    p0 = neg @ neg.conj().T
    return p0, np.eye(dim, dtype=complex) - p0


def update_alice(game: Game, state: np.ndarray, bob_povms) -> tuple:
    """Exact best binary projective response for Alice, Bob and state fixed."""
    _require_finite(game)
    if game.n_a != 2:
        raise ValueError(f"measurement update needs n_a = 2, got {game.n_a}")
    B = [[np.asarray(m, dtype=complex) for m in povm] for povm in bob_povms]
    d_b = B[0][0].shape[0]
    psi = np.asarray(state, dtype=complex).ravel()
    if psi.size % d_b != 0:
        raise ValueError(f"state length {psi.size} is not divisible by d_b={d_b}")
    d_a = psi.size // d_b
    rho = np.outer(psi, psi.conj())
    eye_a = np.eye(d_a, dtype=complex)

    K = np.empty((game.n_t, game.n_b, d_a, d_a), dtype=complex)
    for t in range(game.n_t):
        for b in range(game.n_b):
            K[t, b] = partial_trace_b(kron(eye_a, B[t][b]) @ rho, d_a, d_b)
    R = np.einsum("stab,tbij->saij", _weights(game), K, optimize=True)
    return tuple(_binary_split(R[s, 0] - R[s, 1], d_a) for s in range(game.n_s))


def update_bob(game: Game, state: np.ndarray, alice_povms) -> tuple:
    """Exact best binary projective response for Bob, Alice and state fixed."""
    _require_finite(game)
    if game.n_b != 2:
        raise ValueError(f"measurement update needs n_b = 2, got {game.n_b}")
    A = [[np.asarray(m, dtype=complex) for m in povm] for povm in alice_povms]
    d_a = A[0][0].shape[0]
    psi = np.asarray(state, dtype=complex).ravel()
    if psi.size % d_a != 0:
        raise ValueError(f"state length {psi.size} is not divisible by d_a={d_a}")
    d_b = psi.size // d_a
    rho = np.outer(psi, psi.conj())
    eye_b = np.eye(d_b, dtype=complex)

    K = np.empty((game.n_s, game.n_a, d_b, d_b), dtype=complex)
    for s in range(game.n_s):
        for a in range(game.n_a):
            K[s, a] = partial_trace_a(kron(A[s][a], eye_b) @ rho, d_a, d_b)
    R = np.einsum("stab,saij->tbij", _weights(game), K, optimize=True)
    return tuple(_binary_split(R[t, 0] - R[t, 1], d_b) for t in range(game.n_t))


def _random_state(rng: np.random.Generator, dim: int) -> np.ndarray:
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def _random_binary_projective(rng: np.random.Generator, dim: int):
    # random orthonormal frame; outcome 0 takes the first floor(dim/2) directions
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, _ = np.linalg.qr(g)
    half = q[:, : dim // 2]
    p0 = half @ half.conj().T
    return p0, np.eye(dim, dtype=complex) - p0


def seesaw_upper_bound(game: Game, config: SeesawConfig = SeesawConfig()) -> SeesawReport:
    """Best quantum cost found over config.restarts random restarts.

    Each restart draws its own state and measurements from a generator
    seeded by (seed, restart index), so results do not depend on how
    restarts are scheduled.  A restart stops when an iteration improves
    the cost by less than config.tol or after config.max_iters rounds.
    Ties between restarts keep the earliest one.
    """
    _require_finite(game)
    if game.n_a != 2 or game.n_b != 2:
        raise ValueError(
            f"see-saw handles binary answers only, got n_a={game.n_a}, n_b={game.n_b}"
        )
    best_cost = math.inf
    best_strategy = None
    traces = []
    for restart in range(config.restarts):
        rng = np.random.default_rng([config.seed, restart])
        state = _random_state(rng, config.d_a * config.d_b)
        alice = tuple(_random_binary_projective(rng, config.d_a) for _ in range(game.n_s))
        bob = tuple(_random_binary_projective(rng, config.d_b) for _ in range(game.n_t))

        operator = game_operator(game, alice, bob)
        cost = float(np.vdot(state, operator @ state).real)
        trace = [cost]
        for _ in range(config.max_iters):
            alice = update_alice(game, state, bob)
            bob = update_bob(game, state, alice)
            state, new_cost = optimal_state(game, alice, bob)
            trace.append(new_cost)
            improvement = cost - new_cost
            cost = new_cost
            if improvement < config.tol:
                break
        traces.append(tuple(trace))
        if best_strategy is None or cost < best_cost:
            best_cost = cost
            best_strategy = QuantumStrategy(config.d_a, config.d_b, state, alice, bob)
    return SeesawReport(best_cost, best_strategy, tuple(traces))
