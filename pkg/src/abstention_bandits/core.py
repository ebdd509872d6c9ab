"""Bandit-with-abstention environment: instances, settings, reward generation.

Arms carry unit-variance Gaussian rewards with unknown means. The agent picks
an arm and simultaneously decides whether to abstain from the stochastic
reward; the sample is observed either way. Abstaining costs a fixed regret c
(fixed-regret setting) or pays a fixed reward c (fixed-reward setting).

Arm indices are 0-based everywhere in code; the CLI/CSV surface is 1-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

__all__ = [
    "Action",
    "AbstentionSetting",
    "BanditInstance",
    "Observation",
    "RandomStream",
    "make_instance",
    "sample_reward",
    "suboptimality_gaps",
]


@dataclass(frozen=True)
class BanditInstance:
    """Ground-truth arm means with a unique best arm.

    Construct via :func:`make_instance`, which validates the uniqueness of the
    maximum. Instances are immutable and safe to share across workers.
    """

    means: tuple[float, ...]
    best_arm: int

    @property
    def num_arms(self) -> int:
        return len(self.means)

    @property
    def best_mean(self) -> float:
        return self.means[self.best_arm]


def make_instance(means) -> BanditInstance:
    """Validate a mean vector and return a :class:`BanditInstance`.

    Rejects empty vectors, non-finite entries, and a tied maximum (the
    analysis assumes a unique optimal arm, so ties are an input error rather
    than something to break silently).
    """
    means = tuple(float(m) for m in means)
    if not means:
        raise ValueError("instance needs at least one arm")
    for m in means:
        if not math.isfinite(m):
            raise ValueError(f"arm means must be finite, got {m!r}")
    best = max(range(len(means)), key=means.__getitem__)
    if sum(1 for m in means if m == means[best]) > 1:
        raise ValueError("tied maximum mean: the best arm must be unique")
    return BanditInstance(means=means, best_arm=best)


def suboptimality_gaps(instance: BanditInstance) -> tuple[float, ...]:
    """Per-arm gap to the best mean; zero exactly at the best arm."""
    top = instance.best_mean
    return tuple(top - m for m in instance.means)


@dataclass(frozen=True)
class AbstentionSetting:
    """Which regret accounting applies, and the abstention parameter c.

    kind "rg": fixed-regret, abstaining costs a deterministic regret c > 0.
    kind "rw": fixed-reward, abstaining yields a deterministic reward c (any
    finite real; c may exceed the best mean, in which case abstaining is the
    optimal action).
    """

    kind: str
    c: float

    def __post_init__(self):
        if self.kind not in ("rg", "rw"):
            raise ValueError(f"setting kind must be 'rg' or 'rw', got {self.kind!r}")
        if not math.isfinite(self.c):
            raise ValueError("abstention parameter c must be finite")
        if self.kind == "rg" and not self.c > 0:
            raise ValueError("fixed-regret setting requires c > 0")

    @property
    def is_fixed_regret(self) -> bool:
        return self.kind == "rg"


def fixed_regret(c: float) -> AbstentionSetting:
    return AbstentionSetting(kind="rg", c=float(c))


def fixed_reward(c: float) -> AbstentionSetting:
    return AbstentionSetting(kind="rw", c=float(c))


class Action(NamedTuple):
    """One step's decision: the pulled arm and the abstention flag."""

    arm: int
    abstain: bool


class Observation(NamedTuple):
    """The reward sample; produced whether or not the agent abstained."""

    reward: float


class RandomStream:
    """Deterministic stream of uniforms and standard normals.

    Backed by numpy's PCG64. Values are pulled from the generator in blocks of
    4096 and served one at a time, so a given seed plus a given sequence of
    ``uniform()``/``gaussian()`` calls always reproduces the same values,
    bit-for-bit, regardless of wall clock, platform thread schedule, or worker
    process. Streams are never shared between consumers.
    """

    _BLOCK = 4096

    __slots__ = ("_gen", "_uniforms", "_ui", "_normals", "_zi")

    def __init__(self, seed: int):
        self._gen = np.random.Generator(np.random.PCG64(seed))
        self._uniforms: list[float] = []
        self._ui = 0
        self._normals: list[float] = []
        self._zi = 0

    def uniform(self) -> float:
        """One draw from U[0, 1)."""
        i = self._ui
        if i == len(self._uniforms):
            self._uniforms = self._gen.random(self._BLOCK).tolist()
            i = 0
        self._ui = i + 1
        return self._uniforms[i]

    def gaussian(self) -> float:
        """One draw from N(0, 1)."""
        i = self._zi
        if i == len(self._normals):
            self._normals = self._gen.standard_normal(self._BLOCK).tolist()
            i = 0
        self._zi = i + 1
        return self._normals[i]


def sample_reward(instance: BanditInstance, arm: int, stream: RandomStream) -> Observation:
    """Draw one reward from N(mean[arm], 1); consumes exactly one Gaussian."""
    if not 0 <= arm < len(instance.means):
        raise IndexError(f"arm {arm} out of range for {len(instance.means)} arms")
    return Observation(instance.means[arm] + stream.gaussian())
