"""Arm-sampling rules and abstention decision rules.

Two abstaining algorithms plus their non-abstaining baselines:

* ``frg-tswa`` — less-exploring Thompson sampling with two fixed-regret
  abstention criteria (a lower-confidence-bound gap test and a worst-case
  time test). Anytime.
* ``frw-tswa`` / ``frw-ucbwa`` — a generic wrapper that adds the fixed-reward
  abstention rule (abstain iff the chosen arm's empirical mean is at most c)
  on top of a base algorithm; here the base is less-exploring Thompson
  sampling or a horizon-aware Gaussian UCB index.
* ``les-ts`` / ``kl-ucb-pp`` — the bare base algorithms, never abstaining.

Randomness discipline: only arm selection and reward draws consume the
stream; every abstention rule is a deterministic function of the statistics.
This is what makes the large-|c| reductions bit-exact (with c huge the
fixed-regret algorithm replays the bare TS baseline; with c very negative the
fixed-reward wrapper replays its base algorithm).
"""

from __future__ import annotations

import math

from .core import Action, Observation, RandomStream

__all__ = [
    "ArmStats",
    "AbstentionWrapper",
    "KLUCBPlusPlus",
    "LessExploringTS",
    "FixedRegretAbstainingTS",
    "ALGORITHMS",
    "frg_abstain",
    "frg_init_abstain",
    "frw_abstain",
    "kl_ucb_pp_index",
    "lcb",
    "les_ts_select",
    "make_policy",
]

_INF = math.inf


class ArmStats:
    """Per-arm running state: pull counts split by abstention, and means.

    The empirical mean of a never-pulled arm is the +infinity sentinel. It is
    represented by ``pulls[i] == 0`` (``mean()`` returns ``math.inf``) and
    never enters arithmetic: consumers either require a pull first or treat
    the sentinel as greater than any finite value in comparisons.
    """

    __slots__ = ("pulls", "pulls_no_abstain", "pulls_abstain", "sum_rewards", "_means")

    def __init__(self, num_arms: int):
        if num_arms < 1:
            raise ValueError("need at least one arm")
        self.pulls = [0] * num_arms
        self.pulls_no_abstain = [0] * num_arms
        self.pulls_abstain = [0] * num_arms
        self.sum_rewards = [0.0] * num_arms
        self._means = [0.0] * num_arms  # valid only where pulls > 0

    @property
    def num_arms(self) -> int:
        return len(self.pulls)

    def mean(self, arm: int) -> float:
        """Empirical mean, or +inf for a never-pulled arm."""
        return self._means[arm] if self.pulls[arm] else _INF

    def record(self, arm: int, abstain: bool, reward: float) -> None:
        """Fold one observation in. The sample counts even when abstaining."""
        n = self.pulls[arm] + 1
        self.pulls[arm] = n
        if abstain:
            self.pulls_abstain[arm] += 1
        else:
            self.pulls_no_abstain[arm] += 1
        s = self.sum_rewards[arm] + reward
        self.sum_rewards[arm] = s
        self._means[arm] = s / n


def lcb(stats: ArmStats, arm: int, t: int, c: float) -> float:
    """Lower confidence bound: mean minus sqrt((6 ln t + 2 ln(c v 1)) / N).

    Logs are natural. Drives the gap-dependent abstention criterion: if some
    other arm's LCB sits at least c above the chosen arm's mean, the chosen
    arm's gap is at least c with high probability.
    """
    n = stats.pulls[arm]
    if n == 0:
        raise ValueError("LCB undefined for a never-pulled arm")
    return stats.mean(arm) - math.sqrt((6.0 * math.log(t) + 2.0 * math.log(max(c, 1.0))) / n)


def frg_init_abstain(t: int, num_arms: int, c: float) -> bool:
    """Initialization-phase abstention rule: abstain iff sqrt(K/t) >= c."""
    return math.sqrt(num_arms / t) >= c


def frg_abstain(stats: ArmStats, chosen: int, t: int, c: float, num_arms: int) -> bool:
    """Fixed-regret abstention rule for the post-initialization phase.

    Abstain iff max over other arms of (LCB_i(t) - mean_chosen) >= c, or
    sqrt(K/t) >= c. Both boundaries are inclusive. Deterministic; consumes no
    randomness.
    """
    if math.sqrt(num_arms / t) >= c:
        return True
    radius_num = 6.0 * math.log(t) + 2.0 * math.log(max(c, 1.0))
    pulls = stats.pulls
    means = stats._means
    threshold = means[chosen] + c
    for i in range(num_arms):
        if i == chosen:
            continue
        if means[i] - math.sqrt(radius_num / pulls[i]) >= threshold:
            return True
    return False


def frw_abstain(stats: ArmStats, chosen: int, c: float) -> bool:
    """Fixed-reward abstention rule: abstain iff the chosen arm's empirical
    mean is at most c. The never-pulled sentinel compares greater than any
    finite c, so the first pull of an arm never abstains."""
    if stats.pulls[chosen] == 0:
        return False
    return stats._means[chosen] <= c


def les_ts_select(stats: ArmStats, num_arms: int, stream: RandomStream) -> int:
    """Less-exploring Thompson sampling selection.

    For each arm in ascending index order draw one Bernoulli(1/K) (one
    uniform; success iff u < 1/K). On success draw one Gaussian and score the
    arm with a posterior sample N(mean, 1/N); otherwise score it with its
    empirical mean. Returns the argmax score, ties broken by lowest index.
    Stream consumption order is fixed: u_1, [z_1], u_2, [z_2], ...
    """
    pulls = stats.pulls
    means = stats._means
    p = 1.0 / num_arms
    best = 0
    best_score = -_INF
    uniform = stream.uniform
    gaussian = stream.gaussian
    for i in range(num_arms):
        n = pulls[i]
        if n == 0:
            raise ValueError("selection requires every arm pulled at least once")
        if uniform() < p:
            score = means[i] + gaussian() / math.sqrt(n)
        else:
            score = means[i]
        if score > best_score:
            best_score = score
            best = i
    return best


def kl_ucb_pp_index(stats: ArmStats, arm: int, horizon: int, num_arms: int) -> float:
    """Horizon-aware Gaussian UCB index: mean + sqrt(2 f(N) / N) with
    f(N) = log+( (T/(K N)) (log+(T/(K N)))^2 + 1 ), log+(x) = max(ln x, 0).

    A never-pulled arm has +infinity index (each arm is pulled once before
    indices apply). Requires the horizon up front; not an anytime rule.
    """
    if horizon < num_arms:
        raise ValueError("horizon must be at least the number of arms")
    n = stats.pulls[arm]
    if n == 0:
        return _INF
    x = horizon / (num_arms * n)
    lx = math.log(x) if x > 1.0 else 0.0
    inner = x * lx * lx + 1.0
    f = math.log(inner) if inner > 1.0 else 0.0
    return stats._means[arm] + math.sqrt(2.0 * f / n)


class _PolicyBase:
    """Shared step/update protocol.

    ``step`` produces the next (arm, abstain) decision; ``update`` consumes
    the matching observation. The two must alternate; time advances on
    update. Stats fold in every observation, abstaining or not.
    """

    tag = ""
    needs_horizon = False

    def __init__(self, num_arms: int):
        if num_arms < 1:
            raise ValueError("need at least one arm")
        self.num_arms = num_arms
        self.stats = ArmStats(num_arms)
        self.t = 0
        self._pending = False

    def step(self, stream: RandomStream) -> Action:
        if self._pending:
            raise RuntimeError("update() must consume the previous step first")
        action = self._decide(stream)
        self._pending = True
        return action

    def update(self, action: Action, obs: Observation) -> None:
        if not self._pending:
            raise RuntimeError("update() without a pending step()")
        self._pending = False
        self.stats.record(action.arm, action.abstain, obs.reward)
        self.t += 1

    def _decide(self, stream: RandomStream) -> Action:
        raise NotImplementedError


class LessExploringTS(_PolicyBase):
    """Baseline: less-exploring Thompson sampling, never abstains.

    Pulls arm t during the first K steps, then samples via
    :func:`les_ts_select`. Anytime.
    """

    tag = "les-ts"

    def _decide(self, stream: RandomStream) -> Action:
        t = self.t + 1
        if t <= self.num_arms:
            return Action(t - 1, False)
        return Action(les_ts_select(self.stats, self.num_arms, stream), False)


class FixedRegretAbstainingTS(_PolicyBase):
    """Less-exploring Thompson sampling plus the fixed-regret abstention
    rules: the round-robin initialization uses the worst-case time test
    alone; afterwards the LCB gap test and the time test work in tandem."""

    tag = "frg-tswa"

    def __init__(self, num_arms: int, c: float):
        super().__init__(num_arms)
        if not c > 0:
            raise ValueError("fixed-regret abstention requires c > 0")
        self.c = c

    def _decide(self, stream: RandomStream) -> Action:
        t = self.t + 1
        k = self.num_arms
        if t <= k:
            return Action(t - 1, frg_init_abstain(t, k, self.c))
        arm = les_ts_select(self.stats, k, stream)
        return Action(arm, frg_abstain(self.stats, arm, t, self.c, k))


class KLUCBPlusPlus(_PolicyBase):
    """Baseline: horizon-aware Gaussian UCB index policy, never abstains.

    Pulls each arm once, then maximizes :func:`kl_ucb_pp_index` (ties to the
    lowest index). Raises if stepped past its declared horizon.
    """

    tag = "kl-ucb-pp"
    needs_horizon = True

    def __init__(self, num_arms: int, horizon: int):
        super().__init__(num_arms)
        if horizon < num_arms:
            raise ValueError("horizon must be at least the number of arms")
        self.horizon = horizon

    def _decide(self, stream: RandomStream) -> Action:
        t = self.t + 1
        if t > self.horizon:
            raise RuntimeError(f"stepped past declared horizon {self.horizon}")
        if t <= self.num_arms:
            return Action(t - 1, False)
        stats = self.stats
        best = 0
        best_index = -_INF
        for i in range(self.num_arms):
            v = kl_ucb_pp_index(stats, i, self.horizon, self.num_arms)
            if v > best_index:
                best_index = v
                best = i
        return Action(best, False)


class AbstentionWrapper:
    """Fixed-reward abstention on top of any base algorithm.

    The base picks the arm exactly as it would alone (the wrapper never
    alters arm choice or stream consumption), then the wrapper abstains iff
    the chosen arm's empirical mean is at most c. Statistics are shared with
    the base; observations always count.
    """

    needs_horizon = False

    def __init__(self, base: _PolicyBase, c: float):
        if not math.isfinite(c):
            raise ValueError("fixed-reward abstention requires finite c")
        self.base = base
        self.c = c
        self.tag = "frw-" + ("ucbwa" if isinstance(base, KLUCBPlusPlus) else "tswa")
        self.needs_horizon = base.needs_horizon

    @property
    def stats(self) -> ArmStats:
        return self.base.stats

    @property
    def t(self) -> int:
        return self.base.t

    @property
    def num_arms(self) -> int:
        return self.base.num_arms

    def step(self, stream: RandomStream) -> Action:
        arm, _ = self.base.step(stream)
        return Action(arm, frw_abstain(self.base.stats, arm, self.c))

    def update(self, action: Action, obs: Observation) -> None:
        self.base.update(action, obs)


ALGORITHMS = ("frg-tswa", "les-ts", "frw-tswa", "frw-ucbwa", "kl-ucb-pp")

_HORIZON_TAGS = ("kl-ucb-pp", "frw-ucbwa")


def make_policy(tag: str, num_arms: int, setting, horizon: int | None = None):
    """Build a policy by CLI tag, validating setting compatibility.

    frg-tswa requires the fixed-regret setting; frw-tswa/frw-ucbwa require
    fixed-reward; the non-abstaining baselines run under either (their
    abstention flag is always false, so only the accounting differs).
    """
    if tag not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {tag!r}; choose from {ALGORITHMS}")
    if tag in _HORIZON_TAGS:
        if horizon is None:
            raise ValueError(f"{tag} needs the horizon up front")
    if tag == "frg-tswa":
        if not setting.is_fixed_regret:
            raise ValueError("frg-tswa runs in the fixed-regret setting only")
        return FixedRegretAbstainingTS(num_arms, setting.c)
    if tag == "les-ts":
        return LessExploringTS(num_arms)
    if tag == "kl-ucb-pp":
        return KLUCBPlusPlus(num_arms, horizon)
    if setting.is_fixed_regret:
        raise ValueError(f"{tag} runs in the fixed-reward setting only")
    if tag == "frw-tswa":
        return AbstentionWrapper(LessExploringTS(num_arms), setting.c)
    return AbstentionWrapper(KLUCBPlusPlus(num_arms, horizon), setting.c)
