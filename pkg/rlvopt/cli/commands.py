"""Subcommand bodies. Each returns a ``Report`` already written to disk."""

import logging

import fsspec
import jsonlines
import pandas as pd

from rlvopt.assembly import (
    FALCON9,
    VehicleDesign,
    assemble_reference,
    assemble_vehicle,
    compare_reference,
    unassembled_comparison,
)
from rlvopt.calibration import load_calibration
from rlvopt.cli.config import RunConfig
from rlvopt.cli.report import Report, validation_report, vehicle_report
from rlvopt.errors import ConfigError, RlvOptError
from rlvopt.missions import MissionSpec
from rlvopt.optimizer import (
    Genome,
    GenomeSpace,
    OptimizationResult,
    SweepPoint,
    run_ga,
    run_sensitivity,
    sweep_frame,
)
from rlvopt.propellants import parse_combo_pair
from rlvopt.staging import ObjectiveSpec

TRAJECTORY_COLUMNS = ["t_s", "altitude_m", "velocity_mps", "pitch_deg", "p_amb_pa", "isp_s", "mass_kg"]


def _path(output_dir: str, name: str) -> tuple[fsspec.AbstractFileSystem, str]:
    fs, root = fsspec.core.url_to_fs(output_dir)
    fs.makedirs(root, exist_ok=True)
    return fs, f"{root.rstrip('/')}/{name}"


def write_frame(frame: pd.DataFrame, output_dir: str, name: str) -> str:
    fs, path = _path(output_dir, name)
    with fs.open(path, "w") as f:
        frame.to_csv(f, index=False)
    logging.info(f"Wrote {path} ({len(frame)} rows)")
    return path


def genome_record(
    combo: str,
    mission: MissionSpec,
    objective: ObjectiveSpec,
    genome: Genome,
    fitness: float | None = None,
    **extra,
) -> dict:
    """One ``genome.jsonl`` line; enough to re-run ``evaluate --genome``."""
    return {
        "combo": combo,
        "mission": mission.name,
        "objective": objective.kind.value,
        "n_reuses": objective.n_reuses,
        "fitness_kg": fitness,
        "genes": genome.as_dict(),
        **extra,
    }


def write_genomes(records: list[dict], output_dir: str) -> str:
    fs, path = _path(output_dir, "genome.jsonl")
    with fs.open(path, "w") as f:
        with jsonlines.Writer(f) as writer:
            writer.write_all(records)
    logging.info(f"Wrote {path} ({len(records)} genomes)")
    return path


def read_genome(path: str) -> tuple[str | None, Genome]:
    """First record of a genome file: its combo (if recorded) and genes."""
    try:
        with fsspec.open(path, "r") as f:
            record = next(iter(jsonlines.Reader(f)), None)
    except FileNotFoundError as e:
        raise ConfigError(f"Genome file not found: {path}") from e
    except jsonlines.InvalidLineError as e:
        raise ConfigError(f"{path}: {e}") from e
    if record is None or "genes" not in record:
        raise ConfigError(f"{path}: no genome record")
    genes = record["genes"]
    try:
        genome = Genome(**{name: float(genes[name]) for name in Genome.gene_names()})
    except KeyError as e:
        raise ConfigError(f"{path}: missing gene {e.args[0]}") from e
    return record.get("combo"), genome


def _space(combo: str, **kwargs) -> GenomeSpace:
    try:
        return GenomeSpace(*parse_combo_pair(combo), **kwargs)
    except ValueError as e:
        raise ConfigError(str(e)) from e


def cmd_evaluate(
    config: RunConfig,
    genome: Genome | None = None,
    combo: str | None = None,
    trajectory: bool = False,
) -> tuple[VehicleDesign, Report]:
    """Assemble one design with the run's constraints and write its report."""
    if genome is None:
        if config.genome is None:
            raise ConfigError("evaluate needs a genome: set `genome` in the config or pass --genome")
        genome = config.genome.to_genome()
    combo = combo or config.combo
    space = _space(combo)
    space.check(genome)
    objective = config.objective_spec()
    vehicle = assemble_vehicle(
        space.decode(genome),
        config.mission_spec(),
        load_calibration(config.calibration_path),
        config.assembly_options(),
    )
    report = vehicle_report(vehicle, objective)
    report.data["genes"] = genome.as_dict()
    if trajectory and vehicle.first_stage.trajectory is not None:
        frame = vehicle.first_stage.trajectory.to_dataframe()[TRAJECTORY_COLUMNS]
        report.files.append(write_frame(frame, config.output_dir, "trajectory.csv"))
    report.write(config.output_dir)
    return vehicle, report


def _ga_summary(result: OptimizationResult, config: RunConfig) -> dict:
    ga = config.ga_config()
    return {
        "profile": config.profile,
        "population": ga.population,
        "generations": ga.generations,
        "seed": result.seed,
        "best_kg": result.fitness,
        "genes": result.genome.as_dict(),
    }


def cmd_optimize(config: RunConfig) -> tuple[OptimizationResult, Report]:
    mission = config.mission_spec()
    objective = config.objective_spec()
    result = run_ga(
        mission,
        objective,
        _space(config.combo),
        config.ga_config(),
        load_calibration(config.calibration_path),
        config.assembly_options(),
    )
    report = vehicle_report(result.vehicle, objective, title="optimize")
    summary = _ga_summary(result, config)
    report.data["ga"] = summary
    report.text += (
        f"\nGA: profile {summary['profile']}, population {summary['population']}, "
        f"{summary['generations']} generations, seed {summary['seed']}\n"
    )
    report.files.append(write_frame(result.history_frame(), config.output_dir, "history.csv"))
    record = genome_record(config.combo, mission, objective, result.genome, result.fitness)
    report.files.append(write_genomes([record], config.output_dir))
    report.write(config.output_dir)
    return result, report


def _json_rows(frame: pd.DataFrame) -> list[dict]:
    return frame.astype(object).where(frame.notna(), None).to_dict("records")


def _study(config: RunConfig, axis: str, filename: str, title: str) -> tuple[pd.DataFrame, Report]:
    mission = config.mission_spec()
    objective = config.objective_spec()
    ga = config.ga_config()
    calibration = load_calibration(config.calibration_path)
    frames, records = [], []
    for combo in [config.combo, *config.study.extra_combos]:
        # validates the pair before any GA run
        _space(combo)
        logging.info(f"{title} {combo}: {axis} over {config.study.grid}")
        points: list[SweepPoint] = run_sensitivity(
            axis, config.study.grid, mission, parse_combo_pair(combo), objective, ga, calibration
        )
        frame = sweep_frame(points)
        frame.insert(0, "combo", combo)
        frames.append(frame)
        records.extend(
            genome_record(
                combo,
                mission,
                objective,
                point.result.genome,
                point.result.fitness,
                axis=axis,
                value=point.value,
            )
            for point in points
            if point.result is not None
        )
    frame = pd.concat(frames, ignore_index=True)
    text = f"{title}: {axis}, {mission.name}, {objective.label}\n\n{frame.to_string(index=False)}\n"
    report = Report(
        title=title,
        data={"axis": axis, "mission": mission.name, "objective": objective.label, "rows": _json_rows(frame)},
        text=text,
        passed=bool(frame["feasible"].any()),
    )
    report.files.append(write_frame(frame, config.output_dir, filename))
    report.files.append(write_genomes(records, config.output_dir))
    report.write(config.output_dir)
    return frame, report


def cmd_sweep(config: RunConfig) -> tuple[pd.DataFrame, Report]:
    """Best objective over the first-stage delta-v grid, one curve per combo."""
    return _study(config, "dv_allocation", "sweep.csv", "sweep")


def cmd_sensitivity(config: RunConfig) -> tuple[pd.DataFrame, Report]:
    return _study(config, config.study.axis, "sensitivity.csv", "sensitivity")


def cmd_validate(config: RunConfig) -> Report:
    """Compare the Falcon 9 reference with its published values.

    A reference that cannot be assembled with the loaded calibration still
    produces a report; it fails and names the constraint that broke.
    """
    calibration = load_calibration(config.calibration_path)
    try:
        vehicle = assemble_reference(FALCON9, calibration)
    except RlvOptError as e:
        logging.warning(f"{FALCON9.name} could not be assembled: {e.constraint}: {e}")
        report = validation_report(FALCON9.description, unassembled_comparison(FALCON9), None, e)
    else:
        report = validation_report(FALCON9.description, compare_reference(FALCON9, vehicle), vehicle)
    report.write(config.output_dir)
    return report
