"""Seeded synthetic trajectory generator with planted ground truth.

Each user follows the same dwell plan: a list of episodes, each emitting
Poisson-spaced events at one location, separated by event-free gaps. Events
inside a dwell can be flipped to a random other symbol (ping-pong style
noise) and occasionally duplicated into same-timestamp bursts, reproducing
the irregular temporal texture of telco data. Everything derives from the
config seed via per-user substreams, so a config maps to exactly one dataset.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from trajsum.core import LocationSymbol, SymbolicTrajectory, TrajPoint


@dataclass(frozen=True, slots=True)
class DwellEpisode:
    """One planted dwell: location index, duration in seconds, events/hour."""

    location: int
    duration: float
    rate: float


@dataclass(frozen=True)
class SynthConfig:
    n_users: int
    alphabet_size: int
    episodes: tuple[DwellEpisode, ...]
    gap: float = 1800.0
    noise_prob: float = 0.0
    burst_prob: float = 0.0
    burst_size: int = 2
    seed: int = 0

    def __post_init__(self):
        if self.n_users < 1:
            raise ValueError("n_users must be positive")
        if self.alphabet_size < 1:
            raise ValueError("alphabet_size must be positive")
        if self.noise_prob > 0 and self.alphabet_size < 2:
            raise ValueError("noise requires at least two symbols")
        if not 0 <= self.noise_prob <= 1 or not 0 <= self.burst_prob <= 1:
            raise ValueError("probabilities must lie in [0, 1]")
        if self.burst_size < 1:
            raise ValueError("burst_size must be at least 1")
        if self.gap < 0:
            raise ValueError("gap must be non-negative")
        if not self.episodes:
            raise ValueError("at least one dwell episode is required")
        for ep in self.episodes:
            if not 0 <= ep.location < self.alphabet_size:
                raise ValueError(f"episode location {ep.location} outside alphabet")
            if ep.duration <= 0 or ep.rate <= 0:
                raise ValueError("episode durations and rates must be positive")


@dataclass(frozen=True, slots=True)
class PlantedDwell:
    """Ground-truth dwell window for one user."""

    start: float
    end: float
    location: LocationSymbol


def location_label(index: int) -> str:
    return f"L{index:03d}"


def _episode_times(rng: np.random.Generator, duration: float, rate: float) -> np.ndarray:
    """Poisson-process event offsets within [0, duration]."""
    scale = 3600.0 / rate
    expected = duration / scale
    times = np.cumsum(rng.exponential(scale, size=int(expected * 2) + 16))
    while times.size and times[-1] <= duration:
        times = np.concatenate(
            [times, times[-1] + np.cumsum(rng.exponential(scale, size=16))]
        )
    return times[times <= duration]


def _generate_user(
    config: SynthConfig, rng: np.random.Generator, symbols: Sequence[LocationSymbol]
) -> tuple[list[TrajPoint], list[PlantedDwell]]:
    points: list[TrajPoint] = []
    planted: list[PlantedDwell] = []
    cursor = 0.0
    for ep in config.episodes:
        offsets = _episode_times(rng, ep.duration, ep.rate)
        times = cursor + offsets
        codes = np.full(times.size, ep.location, dtype=np.int64)
        if config.noise_prob > 0 and times.size:
            flip = rng.random(times.size) < config.noise_prob
            n_flip = int(flip.sum())
            if n_flip:
                others = rng.integers(0, config.alphabet_size - 1, size=n_flip)
                others += others >= ep.location  # uniform over the other symbols
                codes[flip] = others
        if config.burst_prob > 0 and times.size:
            repeats = np.where(
                rng.random(times.size) < config.burst_prob, config.burst_size, 1
            )
            times = np.repeat(times, repeats)
            codes = np.repeat(codes, repeats)
        points.extend(
            TrajPoint(float(t), symbols[int(c)]) for t, c in zip(times, codes)
        )
        planted.append(PlantedDwell(cursor, cursor + ep.duration, symbols[ep.location]))
        cursor += ep.duration + config.gap
    return points, planted


def generate_dataset(
    config: SynthConfig,
) -> tuple[list[SymbolicTrajectory], dict[str, list[PlantedDwell]]]:
    """Generate one trajectory per user plus the planted dwell windows."""
    symbols = [LocationSymbol(location_label(i)) for i in range(config.alphabet_size)]
    streams = np.random.SeedSequence(config.seed).spawn(config.n_users)
    trajectories = []
    ground_truth: dict[str, list[PlantedDwell]] = {}
    for u, stream in enumerate(streams):
        user_id = f"u{u:05d}"
        points, planted = _generate_user(config, np.random.default_rng(stream), symbols)
        trajectories.append(SymbolicTrajectory(user_id, tuple(points)))
        ground_truth[user_id] = planted
    return trajectories, ground_truth


def basic_config(
    n_users: int = 100,
    seed: int = 0,
    noise_prob: float = 0.0,
    n_dwells: int = 3,
    alphabet_size: int = 12,
) -> SynthConfig:
    """Small clean preset: a few well-populated dwells at distinct locations."""
    episodes = tuple(
        DwellEpisode(location=i % alphabet_size, duration=7200.0, rate=20.0)
        for i in range(n_dwells)
    )
    return SynthConfig(
        n_users=n_users,
        alphabet_size=alphabet_size,
        episodes=episodes,
        gap=1800.0,
        noise_prob=noise_prob,
        seed=seed,
    )


#: Interleaved dwell plan with geometrically decaying popularity:
#: location 0 gets 8 dwells, 1 gets 4, 2 gets 2, 3 gets 1. No two adjacent
#: dwells share a location, so each dwell yields its own summary unit.
_HEAVY_TAIL_PLAN = (0, 1, 0, 2, 0, 1, 0, 3, 0, 1, 0, 2, 0, 1, 0)


def heavy_tail_config(
    n_users: int = 5000,
    seed: int = 0,
    noise_prob: float = 0.05,
    alphabet_size: int = 60,
) -> SynthConfig:
    """Preset whose visit-rank distribution is heavy-tailed at the top."""
    episodes = tuple(
        DwellEpisode(location=loc, duration=3600.0, rate=15.0)
        for loc in _HEAVY_TAIL_PLAN
    )
    return SynthConfig(
        n_users=n_users,
        alphabet_size=alphabet_size,
        episodes=episodes,
        gap=1800.0,
        noise_prob=noise_prob,
        seed=seed,
    )


def with_users(config: SynthConfig, n_users: int) -> SynthConfig:
    """Same plan, different population size."""
    return replace(config, n_users=n_users)
