"""Simulation of multiplicative wealth repetition.

A gamble evaluated at a reference wealth fixes per-round growth factors
``(W + dW) / W``; multiplicative repetition draws one factor per round,
i.i.d., and compounds.  The per-round log factor is ergodic: its expectation
equals the long-run time-average growth rate with probability one, which is
exactly what these simulations verify.

Reproducibility contract: trajectory ``i`` consumes an independent Philox
counter-based stream keyed by ``(seed, i)``, so serial and parallel runs —
and re-runs — produce bit-identical paths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BankruptcyError, ValidationError
from .gambles import Gamble

#: Largest outcome_count ** rounds for which ruin probabilities are enumerated exactly.
ENUMERATION_LIMIT = 10**6


@dataclass(frozen=True)
class SimulationConfig:
    """Run shape for multiplicative-repetition simulations."""

    rounds: int
    trajectories: int
    seed: int
    initial_wealth: float

    def __post_init__(self):
        if self.rounds < 1:
            raise ValidationError("rounds", "must be at least 1")
        if self.trajectories < 1:
            raise ValidationError("trajectories", "must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValidationError("seed", "must fit in 64 unsigned bits")
        if not self.initial_wealth > 0.0:
            raise ValidationError("initial_wealth", "must be positive")


@dataclass(frozen=True)
class Trajectory:
    """One simulated wealth path, stored in log space relative to the start.

    ``log_wealth_path[k]`` is ``ln(W_k / W_0)`` after round ``k`` (index 0 is
    the start, always 0.0).  ``realized_growth`` is the final entry divided
    by total elapsed time ``rounds * duration``.
    """

    log_wealth_path: np.ndarray
    duration_per_round: float
    realized_growth: float

    @property
    def rounds(self) -> int:
        return len(self.log_wealth_path) - 1


def multiplicative_factors(g: Gamble, wealth: float) -> list[tuple[float, float]]:
    """Per-round growth factors ``(W + dW) / W`` with their probabilities.

    Raises:
        BankruptcyError: when an outcome with positive probability produces a
            non-positive factor.
    """
    if not wealth > 0.0:
        raise ValidationError("wealth", "must be positive")
    factors = []
    for d, q in g.outcomes:
        factor = (wealth + d) / wealth
        if q > 0.0 and factor <= 0.0:
            raise BankruptcyError(
                f"outcome {d!r} with probability {q!r} gives non-positive factor {factor!r}"
            )
        factors.append((factor, q))
    return factors


def _validate_factors(factors: list[tuple[float, float]]) -> list[tuple[float, float]]:
    """Check normalization and positivity; return the positive-probability entries."""
    if not factors:
        raise ValidationError("factors", "must be non-empty")
    total = math.fsum(q for _, q in factors)
    if abs(total - 1.0) > 1e-12:
        raise ValidationError("factors", f"probabilities sum to {total!r}, not 1")
    positive = []
    for factor, q in factors:
        if q < 0.0:
            raise ValidationError("factors", "probabilities must be non-negative")
        if q > 0.0:
            if factor <= 0.0:
                raise BankruptcyError(f"non-positive factor {factor!r} has probability {q!r}")
            positive.append((factor, q))
    return positive


def _trajectory_rng(seed: int, index: int) -> np.random.Generator:
    # Counter-based keying: stream i is fully determined by (seed, i).
    key = np.array([seed, index], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _draw_indices(
    rng: np.random.Generator, cumulative: np.ndarray, rounds: int
) -> np.ndarray:
    u = rng.random(rounds)
    idx = np.searchsorted(cumulative, u, side="right")
    # Guard the u == cumulative[-1] rounding edge.
    return np.minimum(idx, len(cumulative) - 1)


def simulate(
    config: SimulationConfig,
    factors: list[tuple[float, float]],
    duration_per_round: float = 1.0,
) -> list[Trajectory]:
    """Run multiplicative repetition of the given factors.

    Each round of trajectory ``i`` multiplies wealth by one factor drawn from
    the distribution; paths are accumulated in log space so that round counts
    like 10^5 neither overflow nor underflow.  Output is deterministic given
    ``(seed, trajectory index, round index)``.
    """
    if not duration_per_round > 0.0:
        raise ValidationError("duration_per_round", "must be positive")
    positive = _validate_factors(factors)
    cumulative = np.cumsum([q for _, q in positive])
    cumulative[-1] = 1.0
    log_factors = np.log([f for f, _ in positive])
    elapsed = config.rounds * duration_per_round

    trajectories = []
    for i in range(config.trajectories):
        rng = _trajectory_rng(config.seed, i)
        idx = _draw_indices(rng, cumulative, config.rounds)
        path = np.empty(config.rounds + 1)
        path[0] = 0.0
        np.cumsum(log_factors[idx], out=path[1:])
        path.setflags(write=False)
        trajectories.append(
            Trajectory(
                log_wealth_path=path,
                duration_per_round=duration_per_round,
                realized_growth=float(path[-1] / elapsed),
            )
        )
    return trajectories


def estimate_growth(trajectories: list[Trajectory]) -> tuple[float, float]:
    """Sample mean and standard error of realized growth across trajectories.

    A single trajectory has no spread estimate; its standard error is 0.
    """
    if not trajectories:
        raise ValidationError("trajectories", "must be non-empty")
    values = np.array([t.realized_growth for t in trajectories])
    mean = float(values.mean())
    if len(values) < 2:
        return mean, 0.0
    se = float(values.std(ddof=1) / math.sqrt(len(values)))
    return mean, se


def _ruin_exact(
    positive: list[tuple[float, float]], rounds: int, threshold: float
) -> float:
    """Exhaustive path enumeration with pruning at the first threshold crossing."""
    contributions: list[float] = []

    def descend(depth: int, ratio: float, probability: float) -> None:
        if ratio <= threshold:
            contributions.append(probability)
            return
        if depth == rounds:
            return
        for factor, q in positive:
            descend(depth + 1, ratio * factor, probability * q)

    descend(0, 1.0, 1.0)
    return math.fsum(contributions)


def ruin_probability(
    factors: list[tuple[float, float]],
    config: SimulationConfig,
    threshold_fraction: float,
) -> float:
    """Probability that wealth ever falls to ``threshold_fraction`` of its start.

    Formally ``P(min over rounds of W_k / W_0 <= threshold)`` within
    ``config.rounds`` rounds.  When ``outcome_count ** rounds`` is at most
    :data:`ENUMERATION_LIMIT` the answer is computed by exact enumeration
    (bit-reproducible); otherwise by seeded Monte Carlo over
    ``config.trajectories`` paths.
    """
    if not 0.0 <= threshold_fraction < 1.0:
        raise ValidationError("threshold_fraction", "must lie in [0, 1)")
    positive = _validate_factors(factors)
    if threshold_fraction == 0.0:
        # Strictly positive factors can never reach zero wealth.
        return 0.0

    if len(factors) ** config.rounds <= ENUMERATION_LIMIT:
        return _ruin_exact(positive, config.rounds, threshold_fraction)

    cumulative = np.cumsum([q for _, q in positive])
    cumulative[-1] = 1.0
    log_factors = np.log([f for f, _ in positive])
    log_threshold = math.log(threshold_fraction)
    ruined = 0
    for i in range(config.trajectories):
        rng = _trajectory_rng(config.seed, i)
        idx = _draw_indices(rng, cumulative, config.rounds)
        path = np.cumsum(log_factors[idx])
        if path.min() <= log_threshold:
            ruined += 1
    return ruined / config.trajectories
