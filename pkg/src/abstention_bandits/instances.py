"""Benchmark instance generators for the experiment CLI.

Built-ins:

* ``mu_dagger`` — 7 arms, uniform gaps: [1.0, 0.7 x 6].
* ``mu_ddagger`` — 10 arms, diverse gaps: [1.0, 0.7 x 3, 0.5 x 3, 0.3 x 3].
* ``random`` — K >= 10 arms: arm 1 at 1.0, arms 2-10 at 0.7, the rest drawn
  uniformly from [0.3, 0.5] with a dedicated seed.
* ``minimax-hard`` — the two-instance worst-case pair: base means
  [d, 0, ..., 0] with d = min(sqrt(K/T), c), and a perturbation raising one
  arm to 2d.
* explicit means from a one-mean-per-line text file.

Instance ids are comma-free strings so they embed cleanly in CSV rows.
"""

from __future__ import annotations

from .core import BanditInstance, RandomStream, make_instance

__all__ = [
    "instance_mu_dagger",
    "instance_mu_ddagger",
    "instance_random",
    "instance_minimax_hard",
    "load_means_file",
    "BUILT_IN_INSTANCES",
]


def instance_mu_dagger() -> BanditInstance:
    """7-arm benchmark with uniform suboptimality gaps of 0.3."""
    return make_instance([1.0] + [0.7] * 6)


def instance_mu_ddagger() -> BanditInstance:
    """10-arm benchmark with gap multiset {0.3^3, 0.5^3, 0.7^3}."""
    return make_instance([1.0] + [0.7] * 3 + [0.5] * 3 + [0.3] * 3)


def instance_random(num_arms: int, seed: int) -> BanditInstance:
    """Large random benchmark: [1.0, 0.7 x 9, Unif[0.3, 0.5] x (K - 10)]."""
    if num_arms < 10:
        raise ValueError("random instances need at least 10 arms")
    means = [1.0] + [0.7] * 9
    stream = RandomStream(seed)
    for _ in range(num_arms - 10):
        means.append(0.3 + 0.2 * stream.uniform())
    return make_instance(means)


def instance_minimax_hard(
    num_arms: int, horizon: int, c: float, perturbed_arm: int = 1
) -> tuple[BanditInstance, BanditInstance]:
    """Worst-case pair (base, perturbed) with gap scale min(sqrt(K/T), c).

    ``perturbed_arm`` is the 0-based index raised to twice the scale in the
    perturbed instance (default arm 2, i.e. index 1).
    """
    if num_arms < 2:
        raise ValueError("the hard pair needs at least 2 arms")
    if horizon < num_arms:
        raise ValueError("horizon must be at least the number of arms")
    if not c > 0:
        raise ValueError("the hard construction uses the fixed-regret role, c > 0")
    if not 1 <= perturbed_arm < num_arms:
        raise ValueError("perturbed arm must be a suboptimal index")
    delta = min((num_arms / horizon) ** 0.5, c)
    base = [0.0] * num_arms
    base[0] = delta
    perturbed = list(base)
    perturbed[perturbed_arm] = 2.0 * delta
    return make_instance(base), make_instance(perturbed)


def load_means_file(path) -> BanditInstance:
    """Explicit instance from a text file, one mean per line.

    Blank lines and lines starting with '#' are skipped.
    """
    means = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            means.append(float(line))
    return make_instance(means)


BUILT_IN_INSTANCES = {
    "mu_dagger": "7 arms, uniform gaps: [1.0, 0.7 x 6]",
    "mu_ddagger": "10 arms, diverse gaps: [1.0, 0.7 x 3, 0.5 x 3, 0.3 x 3]",
    "random": "K >= 10 arms: [1.0, 0.7 x 9, Unif[0.3,0.5] x (K-10)]; needs --arms, --instance-seed",
    "minimax-hard": "worst-case pair with scale min(sqrt(K/T), c); needs --arms, --horizon, --c",
    "file": "explicit means from --means-file, one per line",
}
