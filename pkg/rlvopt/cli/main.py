import argparse
import logging
import sys

from rlvopt.cli.commands import (
    cmd_evaluate,
    cmd_optimize,
    cmd_sensitivity,
    cmd_sweep,
    cmd_validate,
    read_genome,
)
from rlvopt.cli.config import RunConfig
from rlvopt.config import load_config
from rlvopt.errors import ConfigError, RlvOptError
from rlvopt.optimizer import AXES
from rlvopt.propellants import parse_combo_pair
from rlvopt.staging import ObjectiveKind

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_CONFIG = 2


def _grid(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, default=None, help="Run config yaml (local path or fsspec URL)")
    common.add_argument("--seed", type=int, default=None, help="GA seed")
    common.add_argument("--profile", choices=["paper", "desk", "custom"], default=None, help="GA scale")
    common.add_argument("--out", type=str, default=None, help="Output directory")
    common.add_argument(
        "--objective",
        choices=[kind.value for kind in ObjectiveKind],
        default=None,
        help="Quantity to minimise",
    )
    common.add_argument(
        "--reuses", type=_positive_int, default=None, help="First-stage flights for the em objective"
    )
    common.add_argument("--combo", type=str, default=None, help="Propellants as STAGE1/STAGE2, e.g. RP1/LH2")
    common.add_argument("--verbose", action="store_true", help="Log at DEBUG level")

    parser = argparse.ArgumentParser(prog="rlvopt", description="Two-stage reusable launch vehicle design")
    subparsers = parser.add_subparsers(dest="command", required=True)

    evaluate = subparsers.add_parser("evaluate", parents=[common], help="Assemble and report one design")
    evaluate.add_argument(
        "--genome", type=str, default=None, help="genome.jsonl; the first record is evaluated"
    )
    evaluate.add_argument("--trajectory", action="store_true", help="Also write trajectory.csv")

    subparsers.add_parser("optimize", parents=[common], help="Run the genetic algorithm")

    sweep = subparsers.add_parser("sweep", parents=[common], help="Optimize over a first-stage delta-v grid")
    sweep.add_argument("--grid", type=_grid, default=None, help="Comma-separated dv1 values in m/s")

    sensitivity = subparsers.add_parser("sensitivity", parents=[common], help="Optimize along a study axis")
    sensitivity.add_argument("--axis", choices=AXES, default=None)
    sensitivity.add_argument("--grid", type=_grid, default=None, help="Comma-separated axis values")

    subparsers.add_parser(
        "validate", parents=[common], help="Compare the Falcon 9 design with published values"
    )
    return parser


def apply_overrides(config: RunConfig, args: argparse.Namespace) -> RunConfig:
    """Command-line flags win over the config file."""
    update = {}
    if args.seed is not None:
        update["seed"] = args.seed
    if args.profile is not None:
        update["profile"] = args.profile
    if args.out is not None:
        update["output_dir"] = args.out
    if args.objective is not None:
        update["objective"] = ObjectiveKind(args.objective)
    if args.reuses is not None:
        update["n_reuses"] = args.reuses
    if args.combo is not None:
        try:
            parse_combo_pair(args.combo)
        except ValueError as e:
            raise ConfigError(str(e)) from e
        update["combo"] = args.combo

    study = {}
    if getattr(args, "axis", None) is not None:
        study["axis"] = args.axis
    if getattr(args, "grid", None) is not None:
        study["grid"] = args.grid
    if study:
        update["study"] = config.study.model_copy(update=study)
    return config.model_copy(update=update)


def run(args: argparse.Namespace) -> int:
    config = apply_overrides(load_config(args.config, RunConfig), args)
    if args.command == "evaluate":
        genome = combo = None
        if args.genome is not None:
            combo, genome = read_genome(args.genome)
            combo = args.combo or combo
        vehicle, report = cmd_evaluate(config, genome, combo, trajectory=args.trajectory)
        print(report.text)
        if vehicle.violations:
            logging.error(f"Infeasible design: {', '.join(vehicle.violations)}")
            return EXIT_INFEASIBLE
    elif args.command == "optimize":
        _, report = cmd_optimize(config)
        print(report.text)
    elif args.command == "sweep":
        _, report = cmd_sweep(config)
        print(report.text)
    elif args.command == "sensitivity":
        _, report = cmd_sensitivity(config)
        print(report.text)
    elif args.command == "validate":
        report = cmd_validate(config)
        print(report.text)
        if not report.passed:
            logging.error("Validation failed")
            return EXIT_INFEASIBLE
    else:
        raise ValueError(f"Unknown command: {args.command}")
    for path in report.files:
        logging.info(f"Wrote {path}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO, force=True)
    try:
        return run(args)
    except ConfigError as e:
        logging.error(f"Configuration error: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except RlvOptError as e:
        logging.error(f"{e.constraint}: {e}")
        print(f"error: {e.constraint}: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
