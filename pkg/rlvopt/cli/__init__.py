from rlvopt.cli.commands import (
    cmd_evaluate,
    cmd_optimize,
    cmd_sensitivity,
    cmd_sweep,
    cmd_validate,
    genome_record,
    read_genome,
)
from rlvopt.cli.config import GenomeConfig, RunConfig, StageGenes, StudyConfig
from rlvopt.cli.report import Report, validation_report, vehicle_report

__all__ = [
    "GenomeConfig",
    "Report",
    "RunConfig",
    "StageGenes",
    "StudyConfig",
    "cmd_evaluate",
    "cmd_optimize",
    "cmd_sensitivity",
    "cmd_sweep",
    "cmd_validate",
    "genome_record",
    "read_genome",
]
