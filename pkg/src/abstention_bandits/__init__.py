"""Stochastic multi-armed bandits with an abstention option.

Simulation library and experiment harness: environment and instances,
abstaining and non-abstaining policies, regret accounting for the
fixed-regret and fixed-reward settings, asymptotic lower-bound constants,
and a seeded Monte Carlo harness with a CSV-emitting CLI.
"""

__version__ = "0.1.0"

from .core import (
    AbstentionSetting,
    Action,
    BanditInstance,
    Observation,
    RandomStream,
    fixed_regret,
    fixed_reward,
    make_instance,
    sample_reward,
    suboptimality_gaps,
)
from .harness import (
    ExperimentConfig,
    ExperimentSummary,
    TrialResult,
    default_checkpoints,
    derive_seed,
    run_experiment,
    run_trial,
    run_trials,
    summarize,
)
from .policies import (
    ALGORITHMS,
    AbstentionWrapper,
    ArmStats,
    FixedRegretAbstainingTS,
    KLUCBPlusPlus,
    LessExploringTS,
    make_policy,
)
from .regret import (
    RegretLedger,
    asymptotic_constant_rg,
    asymptotic_constant_rw,
    instant_regret_rg,
    instant_regret_rw,
    lb_constant,
    lb_curve,
    minimax_reference_rg,
    minimax_reference_rw,
)

__all__ = [
    "ALGORITHMS",
    "AbstentionSetting",
    "AbstentionWrapper",
    "Action",
    "ArmStats",
    "BanditInstance",
    "ExperimentConfig",
    "ExperimentSummary",
    "FixedRegretAbstainingTS",
    "KLUCBPlusPlus",
    "LessExploringTS",
    "Observation",
    "RandomStream",
    "RegretLedger",
    "TrialResult",
    "asymptotic_constant_rg",
    "asymptotic_constant_rw",
    "default_checkpoints",
    "derive_seed",
    "fixed_regret",
    "fixed_reward",
    "instant_regret_rg",
    "instant_regret_rw",
    "lb_constant",
    "lb_curve",
    "make_instance",
    "make_policy",
    "minimax_reference_rg",
    "minimax_reference_rw",
    "run_experiment",
    "run_trial",
    "run_trials",
    "sample_reward",
    "suboptimality_gaps",
    "summarize",
]
