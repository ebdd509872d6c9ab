"""Regret accounting for both abstention settings, plus lower-bound curves.

Two forms are tracked everywhere: *realized* regret substitutes the observed
reward into the definition; *pseudo* regret substitutes the true mean. They
agree in expectation; pseudo has lower variance and is what the figures use
by default.

The asymptotic lower-bound constants are the coefficients of ln T in the
instance-dependent bounds: 2 * sum_i min(gap_i, c) / gap_i^2 for fixed regret
and 2 * sum_i (max(mu_1, c) - max(mu_i, c)) / gap_i^2 for fixed reward (sums
over suboptimal arms). The minimax reference shapes sqrt(KT) ^ cT and
sqrt(KT) are exposed for plotting only; their universal constants are
unspecified, so they are never asserted numerically.
"""

from __future__ import annotations

import math

from .core import AbstentionSetting, BanditInstance, suboptimality_gaps

__all__ = [
    "RegretLedger",
    "asymptotic_constant_rg",
    "asymptotic_constant_rw",
    "instant_regret_rg",
    "instant_regret_rw",
    "lb_constant",
    "lb_curve",
    "minimax_reference_rg",
    "minimax_reference_rw",
]


def instant_regret_rg(
    instance: BanditInstance, arm: int, abstain: bool, c: float, reward: float
) -> tuple[float, float]:
    """Fixed-regret instantaneous (pseudo, realized) regret for one step.

    Abstaining costs the deterministic c; otherwise pseudo is the arm's gap
    and realized is best mean minus the observed reward.
    """
    if abstain:
        return c, c
    top = instance.best_mean
    return top - instance.means[arm], top - reward


def instant_regret_rw(
    instance: BanditInstance, arm: int, abstain: bool, c: float, reward: float
) -> tuple[float, float]:
    """Fixed-reward instantaneous (pseudo, realized) regret for one step.

    The per-step benchmark is m = max(best mean, c): abstaining scores m - c
    (zero when abstention is the optimal action), pulling scores m - mean
    (pseudo) or m - reward (realized).
    """
    m = instance.best_mean
    if c > m:
        m = c
    if abstain:
        r = m - c
        return r, r
    return m - instance.means[arm], m - reward


class RegretLedger:
    """Per-trial cumulative regret accumulator.

    Realized regret is accumulated stepwise. Pseudo regret is derived from
    the integer pull counters, grouped as

        fixed-regret:  c * N1_total + sum_i gap_i * N0_i
        fixed-reward:  (m - c) * N1_total + sum_i (m - mu_i) * N0_i

    (N0/N1 = pulls without/with abstention). The grouped form is exact
    arithmetic on counters, so a reconstruction from final counters matches
    the checkpointed values bit-for-bit, and the all-abstain regime yields
    exactly c * T.
    """

    __slots__ = (
        "setting",
        "instance",
        "pulls_no_abstain",
        "pulls_abstain",
        "_abstain_total",
        "_realized",
        "_pseudo_weights",
        "_abstain_cost",
        "_benchmark",
    )

    def __init__(self, setting: AbstentionSetting, instance: BanditInstance):
        k = instance.num_arms
        self.setting = setting
        self.instance = instance
        self.pulls_no_abstain = [0] * k
        self.pulls_abstain = [0] * k
        self._abstain_total = 0
        self._realized = 0.0
        if setting.is_fixed_regret:
            # per-pull pseudo cost is the gap; abstaining costs c
            self._pseudo_weights = list(suboptimality_gaps(instance))
            self._abstain_cost = setting.c
            self._benchmark = instance.best_mean
        else:
            m = max(instance.best_mean, setting.c)
            self._pseudo_weights = [m - mu for mu in instance.means]
            self._abstain_cost = m - setting.c
            self._benchmark = m

    def record(self, arm: int, abstain: bool, reward: float) -> None:
        if abstain:
            self.pulls_abstain[arm] += 1
            self._abstain_total += 1
            self._realized += self._abstain_cost
        else:
            self.pulls_no_abstain[arm] += 1
            self._realized += self._benchmark - reward

    @property
    def cumulative_realized(self) -> float:
        return self._realized

    @property
    def cumulative_pseudo(self) -> float:
        total = self._abstain_cost * self._abstain_total
        weights = self._pseudo_weights
        for i, n in enumerate(self.pulls_no_abstain):
            if n:
                total += weights[i] * n
        return total


def asymptotic_constant_rg(instance: BanditInstance, c: float) -> float:
    """Coefficient of ln T in the fixed-regret asymptotic bound."""
    if not c > 0:
        raise ValueError("fixed-regret constant requires c > 0")
    total = 0.0
    for g in suboptimality_gaps(instance):
        if g > 0.0:
            # (x/g)/g instead of x/g^2: x <= g, so no spurious over/underflow
            total += min(g, c) / g / g
    return 2.0 * total


def asymptotic_constant_rw(instance: BanditInstance, c: float) -> float:
    """Coefficient of ln T in the fixed-reward asymptotic bound."""
    top = instance.best_mean
    m = max(top, c)
    total = 0.0
    for mu in instance.means:
        g = top - mu
        if g > 0.0:
            num = m - max(mu, c)
            if num > 0.0:
                total += num / g / g
    return 2.0 * total


def lb_constant(setting: AbstentionSetting, instance: BanditInstance) -> float:
    """The matching asymptotic constant for a setting."""
    if setting.is_fixed_regret:
        return asymptotic_constant_rg(instance, setting.c)
    return asymptotic_constant_rw(instance, setting.c)


def lb_curve(constant: float, t_grid) -> list[float]:
    """Asymptotic lower-bound curve constant * ln t, element-wise."""
    if constant < 0:
        raise ValueError("constant must be nonnegative")
    out = []
    for t in t_grid:
        if t < 1:
            raise ValueError("times must be at least 1")
        out.append(constant * math.log(t))
    return out


def minimax_reference_rg(num_arms: int, c: float, t_grid) -> list[float]:
    """Worst-case shape min(sqrt(K t), c t); reference curve only."""
    return [min(math.sqrt(num_arms * t), c * t) for t in t_grid]


def minimax_reference_rw(num_arms: int, t_grid) -> list[float]:
    """Worst-case shape sqrt(K t); reference curve only."""
    return [math.sqrt(num_arms * t) for t in t_grid]
