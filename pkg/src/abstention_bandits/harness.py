"""Seeded trial runner and cross-trial aggregation.

A trial is fully determined by (config, trial_index): the trial's stream seed
is a fixed mixing function of the master seed and the index, so runs are
reproducible bit-for-bit across reruns and across worker counts. Aggregation
is a Welford pass in trial-index order — a fixed sequential reduction — so
summaries do not depend on how trials were scheduled.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

from .core import AbstentionSetting, BanditInstance, RandomStream, sample_reward
from .policies import make_policy
from .regret import RegretLedger

__all__ = [
    "ExperimentConfig",
    "ExperimentSummary",
    "TrialResult",
    "default_checkpoints",
    "derive_seed",
    "run_experiment",
    "run_trial",
    "run_trials",
    "summarize",
]

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def derive_seed(master_seed: int, trial_index: int) -> int:
    """Trial stream seed: SplitMix64 finalizer of master + (i+1)*golden.

    The finalizer is a bijection on 64-bit words and the inputs are distinct
    across trial indices (for a fixed master) and across masters (for a fixed
    index), so derived seeds never collide along either axis. Stable across
    runs, platforms, and thread schedules.
    """
    z = (master_seed + (trial_index + 1) * _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def default_checkpoints(horizon: int, count: int = 20, start: int = 100) -> tuple[int, ...]:
    """About ``count`` geometrically spaced times from ``start`` to horizon."""
    if horizon < 1:
        raise ValueError("horizon must be positive")
    if horizon <= start:
        return (horizon,)
    pts = set()
    ratio = (horizon / start) ** (1.0 / (count - 1))
    x = float(start)
    for _ in range(count):
        pts.add(min(horizon, max(1, round(x))))
        x *= ratio
    pts.add(horizon)
    return tuple(sorted(pts))


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything that determines an experiment's outputs.

    Checkpoints must be sorted, unique, within [1, horizon], and end at the
    horizon. Worker count is deliberately not part of the config: it cannot
    affect results.
    """

    setting: AbstentionSetting
    algorithm: str
    instance: BanditInstance
    horizon: int
    trials: int
    master_seed: int
    checkpoints: tuple[int, ...]

    def __post_init__(self):
        if self.horizon < 1:
            raise ValueError("horizon must be positive")
        if self.trials < 1:
            raise ValueError("need at least one trial")
        cps = self.checkpoints
        if not cps:
            raise ValueError("need at least one checkpoint")
        if list(cps) != sorted(set(cps)):
            raise ValueError("checkpoints must be sorted and unique")
        if cps[0] < 1 or cps[-1] != self.horizon:
            raise ValueError("checkpoints must lie in [1, horizon] and end at the horizon")


@dataclass
class TrialResult:
    """One trial's checkpointed regrets and final per-arm counters."""

    checkpoints: tuple[int, ...]
    pseudo: list[float]
    realized: list[float]
    pulls: list[int]
    pulls_no_abstain: list[int]
    pulls_abstain: list[int]


@dataclass
class ExperimentSummary:
    """Cross-trial mean and sample standard deviation per checkpoint."""

    checkpoints: tuple[int, ...]
    trials: int
    mean_pseudo: list[float]
    std_pseudo: list[float]
    mean_realized: list[float]
    std_realized: list[float]


def run_trial(config: ExperimentConfig, trial_index: int) -> TrialResult:
    """Execute one seeded trial: step, observe, account, update, checkpoint."""
    stream = RandomStream(derive_seed(config.master_seed, trial_index))
    policy = make_policy(
        config.algorithm, config.instance.num_arms, config.setting, config.horizon
    )
    ledger = RegretLedger(config.setting, config.instance)
    instance = config.instance
    step = policy.step
    update = policy.update
    record = ledger.record

    checkpoints = config.checkpoints
    pseudo_traj: list[float] = []
    realized_traj: list[float] = []
    next_cp_pos = 0
    next_cp = checkpoints[0]

    for t in range(1, config.horizon + 1):
        action = step(stream)
        obs = sample_reward(instance, action.arm, stream)
        record(action.arm, action.abstain, obs.reward)
        update(action, obs)
        if t == next_cp:
            pseudo_traj.append(ledger.cumulative_pseudo)
            realized_traj.append(ledger.cumulative_realized)
            next_cp_pos += 1
            next_cp = checkpoints[next_cp_pos] if next_cp_pos < len(checkpoints) else 0

    stats = policy.stats
    return TrialResult(
        checkpoints=checkpoints,
        pseudo=pseudo_traj,
        realized=realized_traj,
        pulls=list(stats.pulls),
        pulls_no_abstain=list(stats.pulls_no_abstain),
        pulls_abstain=list(stats.pulls_abstain),
    )


def run_trials(config: ExperimentConfig, workers: int = 1) -> list[TrialResult]:
    """All trials of an experiment, in trial-index order.

    ``workers > 1`` fans trials out to worker processes; the returned order
    (and hence every downstream number) is independent of the worker count.
    """
    indices = range(config.trials)
    if workers <= 1 or config.trials == 1:
        return [run_trial(config, i) for i in indices]
    chunk = max(1, config.trials // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(partial(run_trial, config), indices, chunksize=chunk))


def summarize(results: list[TrialResult]) -> ExperimentSummary:
    """Welford reduction over trials, in list order, per checkpoint."""
    if not results:
        raise ValueError("nothing to summarize")
    checkpoints = results[0].checkpoints
    ncp = len(checkpoints)
    mean_p = [0.0] * ncp
    m2_p = [0.0] * ncp
    mean_r = [0.0] * ncp
    m2_r = [0.0] * ncp
    n = 0
    for res in results:
        if res.checkpoints != checkpoints:
            raise ValueError("trials disagree on checkpoints")
        n += 1
        for j in range(ncp):
            d = res.pseudo[j] - mean_p[j]
            mean_p[j] += d / n
            m2_p[j] += d * (res.pseudo[j] - mean_p[j])
            d = res.realized[j] - mean_r[j]
            mean_r[j] += d / n
            m2_r[j] += d * (res.realized[j] - mean_r[j])
    if n > 1:
        std_p = [math.sqrt(v / (n - 1)) for v in m2_p]
        std_r = [math.sqrt(v / (n - 1)) for v in m2_r]
    else:
        std_p = [0.0] * ncp
        std_r = [0.0] * ncp
    return ExperimentSummary(
        checkpoints=checkpoints,
        trials=n,
        mean_pseudo=mean_p,
        std_pseudo=std_p,
        mean_realized=mean_r,
        std_realized=std_r,
    )


def run_experiment(config: ExperimentConfig, workers: int = 1) -> ExperimentSummary:
    """Run all trials and aggregate. Bit-stable for a given config."""
    return summarize(run_trials(config, workers=workers))
