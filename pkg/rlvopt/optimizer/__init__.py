from rlvopt.optimizer.fitness import (
    DEFAULT_PENALTY_BASE,
    Evaluation,
    Evaluator,
    fitness,
    penalty,
)
from rlvopt.optimizer.ga import PROFILES, GAConfig, OptimizationResult, run_ga
from rlvopt.optimizer.genome import GeneSpec, Genome, GenomeSpace
from rlvopt.optimizer.operators import crossover, mutate
from rlvopt.optimizer.sweep import (
    AXES,
    SweepPoint,
    run_sensitivity,
    sweep_allocation,
    sweep_frame,
)

__all__ = [
    "AXES",
    "DEFAULT_PENALTY_BASE",
    "PROFILES",
    "Evaluation",
    "Evaluator",
    "GAConfig",
    "GeneSpec",
    "Genome",
    "GenomeSpace",
    "OptimizationResult",
    "SweepPoint",
    "crossover",
    "fitness",
    "mutate",
    "penalty",
    "run_ga",
    "run_sensitivity",
    "sweep_allocation",
    "sweep_frame",
]
