"""Command-line experiment front end.

Subcommands:

* ``run``      — one experiment per algorithm at a single abstention value,
                 rows at every checkpoint of a geometric grid.
* ``sweep-c``  — grid of abstention values at a fixed horizon, one row per
                 (algorithm, c) at t = horizon.
* ``sweep-t``  — grid of horizons at a fixed abstention value. Anytime
                 algorithms run once and are checkpointed at the grid;
                 horizon-aware ones (kl-ucb-pp, frw-ucbwa) are re-run per
                 grid point.
* ``instances``— list the built-in instance generators or show a resolved
                 instance (means, gaps, bound constants; arms printed
                 1-based).

Flags override an optional ``key = value`` config file (``--config``). A
relative ``--out`` lands in $ABSTENTION_BANDITS_OUTDIR when set. Reruns with
identical flags produce byte-identical CSV files; worker count (``--threads``)
never affects the numbers.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass, fields

from . import instances as inst
from .core import AbstentionSetting, BanditInstance
from .harness import ExperimentConfig, default_checkpoints, run_experiment
from .policies import ALGORITHMS
from .regret import lb_constant
from . import __version__

OUTDIR_ENV = "ABSTENTION_BANDITS_OUTDIR"

CSV_HEADER = (
    "setting,algorithm,instance,c,t,mean_pseudo_regret,std_pseudo_regret,"
    "mean_realized_regret,std_realized_regret,trials,master_seed,lb_constant"
)

_HORIZON_ALGOS = ("kl-ucb-pp", "frw-ucbwa")

_DEFAULTS = {
    "trials": 200,
    "seed": 0,
    "threads": 1,
    "instance_seed": 0,
    "minimax_variant": "base",
    "perturbed_arm": 2,
    "c_grid": "0.05:1.0:20",
    "t_scale": "geometric",
}


@dataclass
class ResultRow:
    """One CSV record: a (config, checkpoint) pair plus its bound constant."""

    setting: str
    algorithm: str
    instance: str
    c: float
    t: int
    mean_pseudo_regret: float
    std_pseudo_regret: float
    mean_realized_regret: float
    std_realized_regret: float
    trials: int
    master_seed: int
    lb_constant: float

    def to_csv(self) -> str:
        parts = []
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, float):
                if not math.isfinite(v):
                    raise ValueError(f"non-finite value for {f.name}: {v}")
                parts.append(repr(v))
            else:
                parts.append(str(v))
        return ",".join(parts)


def read_result_rows(path) -> list[ResultRow]:
    """Parse a results CSV back into typed rows (used by tests)."""
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n")
        if header != CSV_HEADER:
            raise ValueError(f"unexpected CSV header: {header!r}")
        rows = []
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            p = line.split(",")
            rows.append(
                ResultRow(
                    setting=p[0],
                    algorithm=p[1],
                    instance=p[2],
                    c=float(p[3]),
                    t=int(p[4]),
                    mean_pseudo_regret=float(p[5]),
                    std_pseudo_regret=float(p[6]),
                    mean_realized_regret=float(p[7]),
                    std_realized_regret=float(p[8]),
                    trials=int(p[9]),
                    master_seed=int(p[10]),
                    lb_constant=float(p[11]),
                )
            )
    return rows


def write_result_rows(path, rows: list[ResultRow]) -> None:
    """UTF-8, newline-terminated records, fixed header, no timestamps."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(CSV_HEADER + "\n")
        for row in rows:
            fh.write(row.to_csv() + "\n")


def parse_grid(text: str, kind: str, scale: str = "linear") -> list[float]:
    """Parse ``start:stop:count`` into a grid (linear or geometric)."""
    try:
        start_s, stop_s, count_s = text.split(":")
        start, stop, count = float(start_s), float(stop_s), int(count_s)
    except ValueError:
        raise ValueError(f"{kind} grid must look like start:stop:count, got {text!r}") from None
    if count < 1:
        raise ValueError(f"{kind} grid needs at least one point")
    if count == 1:
        return [start]
    if scale == "geometric":
        if start <= 0 or stop <= 0:
            raise ValueError(f"geometric {kind} grid needs positive endpoints")
        ratio = (stop / start) ** (1.0 / (count - 1))
        return [start * ratio**i for i in range(count)]
    step = (stop - start) / (count - 1)
    return [start + step * i for i in range(count)]


def _parse_config_file(path) -> dict[str, str]:
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, _, value = line.partition("=")
            values[key.strip().replace("-", "_")] = value.strip()
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abstention-bandits",
        description="Bandit-with-abstention experiments; results go to CSV.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_horizon=True, with_c=True):
        p.add_argument("--config", help="key = value config file; flags override it")
        p.add_argument("--setting", choices=("rg", "rw"), help="rg: fixed-regret; rw: fixed-reward")
        p.add_argument("--instance", help="mu_dagger | mu_ddagger | random | minimax-hard | file")
        p.add_argument("--algo", help="comma-separated algorithm tags: " + ", ".join(ALGORITHMS))
        if with_c:
            p.add_argument("--c", type=float, help="abstention regret (rg) or reward (rw)")
        if with_horizon:
            p.add_argument("--horizon", type=int, help="number of time steps T")
        p.add_argument("--trials", type=int, help=f"independent trials (default {_DEFAULTS['trials']})")
        p.add_argument("--seed", type=int, help=f"master seed (default {_DEFAULTS['seed']})")
        p.add_argument("--threads", type=int,
                       help=f"worker processes; never affects results (default {_DEFAULTS['threads']})")
        p.add_argument("--arms", type=int, help="K for random / minimax-hard instances")
        p.add_argument("--instance-seed", type=int,
                       help=f"seed for the random instance tail (default {_DEFAULTS['instance_seed']})")
        p.add_argument("--means-file", help="one mean per line, for --instance file")
        p.add_argument("--minimax-variant", choices=("base", "perturbed"),
                       help=f"which of the hard pair to run (default {_DEFAULTS['minimax_variant']})")
        p.add_argument("--perturbed-arm", type=int,
                       help=f"1-based arm raised in the perturbed variant (default {_DEFAULTS['perturbed_arm']})")
        p.add_argument("--out", help=f"output CSV; relative paths land in ${OUTDIR_ENV} when set")

    p_run = sub.add_parser("run", help="one experiment per algorithm at a single c")
    add_common(p_run)
    p_run.add_argument("--checkpoints", help="comma-separated times (must end at the horizon)")

    p_sc = sub.add_parser("sweep-c", help="c grid at fixed horizon; rows at t = horizon")
    add_common(p_sc, with_c=False)
    p_sc.add_argument("--c-grid", help=f"start:stop:count, linear (default {_DEFAULTS['c_grid']})")

    p_st = sub.add_parser("sweep-t", help="horizon grid at fixed c")
    add_common(p_st, with_horizon=False)
    p_st.add_argument("--t-grid", help="start:stop:count")
    p_st.add_argument("--t-scale", choices=("geometric", "linear"),
                      help=f"grid spacing (default {_DEFAULTS['t_scale']})")

    p_inst = sub.add_parser("instances", help="list generators or show a resolved instance")
    inst_sub = p_inst.add_subparsers(dest="inst_command", required=True)
    inst_sub.add_parser("list", help="names and shapes of the built-in generators")
    p_show = inst_sub.add_parser("show", help="print means, gaps and bound constants")
    add_common(p_show)
    return parser


def _merge_config(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    """Fill unset options from --config, then from built-in defaults."""
    file_values = {}
    if getattr(args, "config", None):
        try:
            file_values = _parse_config_file(args.config)
        except (OSError, ValueError) as e:
            parser.error(str(e))
    known = {k for k in vars(args)}
    for key, raw in file_values.items():
        if key not in known:
            parser.error(f"config file sets unknown option {key!r}")
        if getattr(args, key) is None:
            # coerce through the same types the flags use
            caster = {
                "c": float,
                "horizon": int,
                "trials": int,
                "seed": int,
                "threads": int,
                "arms": int,
                "instance_seed": int,
                "perturbed_arm": int,
            }.get(key, str)
            try:
                setattr(args, key, caster(raw))
            except ValueError:
                parser.error(f"config file: bad value for {key}: {raw!r}")
    for key, default in _DEFAULTS.items():
        if getattr(args, key, None) is None and key in known:
            setattr(args, key, default)


def _require(args, parser, *names):
    for name in names:
        if getattr(args, name, None) is None:
            parser.error(f"--{name.replace('_', '-')} is required here")


def resolve_instance(args, parser, horizon: int | None = None) -> tuple[BanditInstance, str]:
    """Build the instance named by the flags; returns (instance, comma-free id)."""
    name = args.instance
    if name == "mu_dagger":
        return inst.instance_mu_dagger(), "mu_dagger"
    if name == "mu_ddagger":
        return inst.instance_mu_ddagger(), "mu_ddagger"
    if name == "random":
        _require(args, parser, "arms")
        seed = args.instance_seed
        try:
            built = inst.instance_random(args.arms, seed)
        except ValueError as e:
            parser.error(str(e))
        return built, f"random-K{args.arms}-seed{seed}"
    if name == "minimax-hard":
        _require(args, parser, "arms", "c")
        if horizon is None:
            parser.error("minimax-hard needs a single --horizon (its construction is T-specific)")
        variant = args.minimax_variant
        try:
            base, perturbed = inst.instance_minimax_hard(
                args.arms, horizon, args.c, perturbed_arm=args.perturbed_arm - 1
            )
        except ValueError as e:
            parser.error(str(e))
        built = base if variant == "base" else perturbed
        return built, f"minimax-K{args.arms}-T{horizon}-c{args.c!r}-{variant}"
    if name == "file":
        _require(args, parser, "means_file")
        try:
            built = inst.load_means_file(args.means_file)
        except (OSError, ValueError) as e:
            parser.error(str(e))
        stem = os.path.splitext(os.path.basename(args.means_file))[0]
        return built, "file-" + stem.replace(",", "_")
    parser.error(f"unknown instance {name!r}; see 'instances list'")


def _split_algos(args, parser) -> list[str]:
    tags = [a.strip() for a in args.algo.split(",") if a.strip()]
    if not tags:
        parser.error("--algo needs at least one algorithm tag")
    for tag in tags:
        if tag not in ALGORITHMS:
            parser.error(f"unknown algorithm {tag!r}; choose from {', '.join(ALGORITHMS)}")
    return tags


def _check_setting_compat(tags, setting, parser):
    for tag in tags:
        if tag == "frg-tswa" and setting.kind != "rg":
            parser.error("frg-tswa runs under --setting rg only")
        if tag.startswith("frw-") and setting.kind != "rw":
            parser.error(f"{tag} runs under --setting rw only")


def _make_setting(args, parser, c: float | None = None) -> AbstentionSetting:
    c = args.c if c is None else c
    try:
        return AbstentionSetting(kind=args.setting, c=c)
    except ValueError as e:
        parser.error(str(e))


def _out_path(args) -> str:
    out = args.out
    if out is None:
        out = f"{args.command}-{args.setting}-{args.instance}.csv"
    if not os.path.isabs(out):
        outdir = os.environ.get(OUTDIR_ENV)
        if outdir:
            out = os.path.join(outdir, out)
    return out


def _summary_rows(setting, algorithm, instance_id, instance, config, summary) -> list[ResultRow]:
    const = lb_constant(setting, instance)
    rows = []
    for j, t in enumerate(summary.checkpoints):
        rows.append(
            ResultRow(
                setting=setting.kind,
                algorithm=algorithm,
                instance=instance_id,
                c=setting.c,
                t=t,
                mean_pseudo_regret=summary.mean_pseudo[j],
                std_pseudo_regret=summary.std_pseudo[j],
                mean_realized_regret=summary.mean_realized[j],
                std_realized_regret=summary.std_realized[j],
                trials=config.trials,
                master_seed=config.master_seed,
                lb_constant=const,
            )
        )
    return rows


def _cmd_run(args, parser) -> int:
    _require(args, parser, "setting", "instance", "algo", "horizon", "c")
    setting = _make_setting(args, parser)
    tags = _split_algos(args, parser)
    _check_setting_compat(tags, setting, parser)
    instance, instance_id = resolve_instance(args, parser, horizon=args.horizon)
    if args.checkpoints:
        try:
            cps = tuple(int(x) for x in args.checkpoints.split(","))
        except ValueError:
            parser.error("--checkpoints must be comma-separated integers")
    else:
        cps = default_checkpoints(args.horizon)
    rows = []
    for tag in tags:
        config = ExperimentConfig(
            setting=setting,
            algorithm=tag,
            instance=instance,
            horizon=args.horizon,
            trials=args.trials,
            master_seed=args.seed,
            checkpoints=cps,
        )
        summary = run_experiment(config, workers=args.threads)
        rows.extend(_summary_rows(setting, tag, instance_id, instance, config, summary))
    out = _out_path(args)
    write_result_rows(out, rows)
    print(f"wrote {len(rows)} rows to {out}")
    return 0


def _cmd_sweep_c(args, parser) -> int:
    _require(args, parser, "setting", "instance", "algo", "horizon")
    try:
        c_values = parse_grid(args.c_grid, "c", scale="linear")
    except ValueError as e:
        parser.error(str(e))
    tags = _split_algos(args, parser)
    if args.instance == "minimax-hard":
        parser.error("minimax-hard is c-specific; use 'run' for it")
    instance, instance_id = resolve_instance(args, parser, horizon=args.horizon)
    rows = []
    for c in c_values:
        setting = _make_setting(args, parser, c=c)
        _check_setting_compat(tags, setting, parser)
        for tag in tags:
            config = ExperimentConfig(
                setting=setting,
                algorithm=tag,
                instance=instance,
                horizon=args.horizon,
                trials=args.trials,
                master_seed=args.seed,
                checkpoints=(args.horizon,),
            )
            summary = run_experiment(config, workers=args.threads)
            rows.extend(_summary_rows(setting, tag, instance_id, instance, config, summary))
    out = _out_path(args)
    write_result_rows(out, rows)
    print(f"wrote {len(rows)} rows to {out}")
    return 0


def _cmd_sweep_t(args, parser) -> int:
    _require(args, parser, "setting", "instance", "algo", "c", "t_grid")
    setting = _make_setting(args, parser)
    tags = _split_algos(args, parser)
    _check_setting_compat(tags, setting, parser)
    if args.instance == "minimax-hard":
        parser.error("minimax-hard is T-specific; use 'run' for it")
    try:
        grid = sorted({int(round(t)) for t in parse_grid(args.t_grid, "T", scale=args.t_scale)})
    except ValueError as e:
        parser.error(str(e))
    if grid[0] < 1:
        parser.error("horizons must be positive")
    instance, instance_id = resolve_instance(args, parser, horizon=grid[-1])
    rows = []
    for tag in tags:
        if tag in _HORIZON_ALGOS:
            # horizon-aware index: one fresh run per horizon
            for t in grid:
                config = ExperimentConfig(
                    setting=setting,
                    algorithm=tag,
                    instance=instance,
                    horizon=t,
                    trials=args.trials,
                    master_seed=args.seed,
                    checkpoints=(t,),
                )
                summary = run_experiment(config, workers=args.threads)
                rows.extend(_summary_rows(setting, tag, instance_id, instance, config, summary))
        else:
            # anytime: one long run checkpointed at the grid
            config = ExperimentConfig(
                setting=setting,
                algorithm=tag,
                instance=instance,
                horizon=grid[-1],
                trials=args.trials,
                master_seed=args.seed,
                checkpoints=tuple(grid),
            )
            summary = run_experiment(config, workers=args.threads)
            rows.extend(_summary_rows(setting, tag, instance_id, instance, config, summary))
    out = _out_path(args)
    write_result_rows(out, rows)
    print(f"wrote {len(rows)} rows to {out}")
    return 0


def _cmd_instances(args, parser) -> int:
    if args.inst_command == "list":
        for name, desc in inst.BUILT_IN_INSTANCES.items():
            print(f"{name:14s} {desc}")
        return 0
    _require(args, parser, "instance")
    horizon = getattr(args, "horizon", None)
    instance, instance_id = resolve_instance(args, parser, horizon=horizon)
    from .core import suboptimality_gaps
    from .regret import asymptotic_constant_rg, asymptotic_constant_rw

    gaps = suboptimality_gaps(instance)
    print(f"instance {instance_id}: K = {instance.num_arms}, best arm = {instance.best_arm + 1}")
    for i, (mu, g) in enumerate(zip(instance.means, gaps), start=1):
        print(f"  arm {i:3d}: mean = {mu!r}  gap = {g!r}")
    if args.c is not None:
        if args.c > 0:
            print(f"  fixed-regret ln T constant at c={args.c!r}: "
                  f"{asymptotic_constant_rg(instance, args.c)!r}")
        print(f"  fixed-reward ln T constant at c={args.c!r}: "
              f"{asymptotic_constant_rw(instance, args.c)!r}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    _merge_config(args, parser)
    if args.command == "run":
        return _cmd_run(args, parser)
    if args.command == "sweep-c":
        return _cmd_sweep_c(args, parser)
    if args.command == "sweep-t":
        return _cmd_sweep_t(args, parser)
    return _cmd_instances(args, parser)


if __name__ == "__main__":
    sys.exit(main())
