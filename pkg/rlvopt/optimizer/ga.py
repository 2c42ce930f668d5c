"""Generational genetic algorithm on top of DEAP.

The loop follows DEAP's ``eaSimple``: evaluate, tournament-select, vary with
crossover and mutation, re-evaluate the changed individuals. Selection draws
from the seeded ``random`` module as DEAP does; variation draws from a seeded
numpy generator. Fitness is deterministic, so worker count never changes
the result.
"""

import contextlib
import functools
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np
import pandas as pd
import pydantic
from deap import base, creator, tools

from rlvopt.assembly import AssemblyOptions, Calibration, VehicleDesign
from rlvopt.config import ConfigBase, Mass
from rlvopt.errors import NoFeasibleIndividual
from rlvopt.missions import MissionSpec
from rlvopt.optimizer.fitness import DEFAULT_PENALTY_BASE, Evaluator
from rlvopt.optimizer.genome import Genome, GenomeSpace
from rlvopt.optimizer.operators import crossover, mutate
from rlvopt.staging import ObjectiveSpec

if not hasattr(creator, "VehicleFitness"):
    creator.create("VehicleFitness", base.Fitness, weights=(-1.0,))
    creator.create("VehicleIndividual", list, fitness=creator.VehicleFitness)

ProfileName = Literal["paper", "desk", "custom"]
HISTORY_FIELDS = ["generation", "best", "mean", "feasible_fraction", "evaluations"]


class GAConfig(ConfigBase):
    population: int = pydantic.Field(default=5000, ge=1)
    generations: int = pydantic.Field(default=50, ge=0)
    tournament_size: int = pydantic.Field(default=3, ge=1)
    mating_prob: float = pydantic.Field(default=0.3, ge=0.0, le=1.0)
    mutation_prob: float = pydantic.Field(default=0.1, ge=0.0, le=1.0)
    gene_crossover_prob: float = pydantic.Field(default=0.7, ge=0.0, le=1.0)
    gene_mutation_prob: float = pydantic.Field(default=0.5, ge=0.0, le=1.0)
    seed: int = 0
    penalty_base: Mass = pydantic.Field(default=DEFAULT_PENALTY_BASE, gt=0.0)
    n_workers: int = pydantic.Field(default=1, ge=1)

    @classmethod
    def profile(cls, name: ProfileName, base_config: "GAConfig | None" = None) -> "GAConfig":
        """Population and generation count of a named profile on top of ``base_config``."""
        config = base_config or cls()
        if name == "custom":
            return config
        if name not in PROFILES:
            raise ValueError(f"Unknown profile: {name}")
        return config.model_copy(update=PROFILES[name])


PROFILES: dict[str, dict[str, int]] = {
    "paper": {"population": 5000, "generations": 50},
    "desk": {"population": 200, "generations": 30},
}


@dataclass
class OptimizationResult:
    genome: Genome
    vehicle: VehicleDesign
    fitness: float
    seed: int
    space: GenomeSpace
    objective: ObjectiveSpec
    history: list[dict] = field(default_factory=list)

    def history_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(self.history, columns=HISTORY_FIELDS)
        return frame.rename(columns={"best": "best_kg", "mean": "mean_kg"})


def _feasible_mean(values: Sequence[float], penalty_base: float) -> float:
    feasible = [v for v in values if v < penalty_base]
    return float(np.mean(feasible)) if feasible else float("nan")


def _feasible_fraction(values: Sequence[float], penalty_base: float) -> float:
    return sum(v < penalty_base for v in values) / len(values)


def _vary(offspring, toolbox: base.Toolbox, config: GAConfig, rng: np.random.Generator):
    offspring = [toolbox.clone(ind) for ind in offspring]
    for i in range(1, len(offspring), 2):
        if rng.random() < config.mating_prob:
            offspring[i - 1], offspring[i] = toolbox.mate(offspring[i - 1], offspring[i])
            del offspring[i - 1].fitness.values, offspring[i].fitness.values
    for i in range(len(offspring)):
        if rng.random() < config.mutation_prob:
            (offspring[i],) = toolbox.mutate(offspring[i])
            del offspring[i].fitness.values
    return offspring


def _evaluate_invalid(population, toolbox: base.Toolbox) -> int:
    invalid = [ind for ind in population if not ind.fitness.valid]
    # Plain lists cross the process boundary; creator classes may not exist there.
    fitnesses = toolbox.map(toolbox.evaluate, [list(ind) for ind in invalid])
    for ind, fit in zip(invalid, fitnesses):
        ind.fitness.values = fit
    return len(invalid)


def run_ga(
    mission: MissionSpec,
    objective: ObjectiveSpec,
    space: GenomeSpace,
    config: GAConfig | None = None,
    calibration: Calibration | None = None,
    options: AssemblyOptions | None = None,
    initial: Sequence[Genome] | None = None,
) -> OptimizationResult:
    """Minimise ``objective`` over ``space`` and return the best design ever seen.

    ``initial`` replaces the random initial population; its size then sets the
    population size.
    """
    config = config or GAConfig()
    calibration = calibration or Calibration()
    evaluator = Evaluator(
        space, mission, objective, calibration, config.penalty_base, options or AssemblyOptions()
    )
    random.seed(config.seed)
    rng = np.random.default_rng(config.seed)

    toolbox = base.Toolbox()
    toolbox.register("evaluate", evaluator)
    toolbox.register("select", tools.selTournament, tournsize=config.tournament_size)
    toolbox.register(
        "mate", crossover, space=space, gene_prob=config.gene_crossover_prob, rng=rng
    )
    toolbox.register("mutate", mutate, space=space, gene_prob=config.gene_mutation_prob, rng=rng)

    if initial is not None:
        population = [creator.VehicleIndividual(g.as_list()) for g in initial]
    else:
        population = [
            creator.VehicleIndividual(space.sample(rng)) for _ in range(config.population)
        ]

    hall_of_fame = tools.HallOfFame(1)
    stats = tools.Statistics(key=lambda ind: ind.fitness.values[0])
    stats.register("mean", _feasible_mean, penalty_base=config.penalty_base)
    stats.register("feasible_fraction", _feasible_fraction, penalty_base=config.penalty_base)
    logbook = tools.Logbook()
    logbook.header = HISTORY_FIELDS

    logging.info(
        f"GA {space.first.name}/{space.upper.name} {mission.name} {objective.label}: "
        f"population {len(population)}, {config.generations} generations, seed {config.seed}"
    )
    with contextlib.ExitStack() as stack:
        if config.n_workers > 1:
            executor = stack.enter_context(ProcessPoolExecutor(max_workers=config.n_workers))
            toolbox.register("map", functools.partial(executor.map, chunksize=8))

        _evaluate_invalid(population, toolbox)
        hall_of_fame.update(population)
        for generation in range(1, config.generations + 1):
            offspring = toolbox.select(population, len(population))
            offspring = _vary(offspring, toolbox, config, rng)
            evaluations = _evaluate_invalid(offspring, toolbox)
            population[:] = offspring
            hall_of_fame.update(population)

            record = stats.compile(population)
            best = hall_of_fame[0].fitness.values[0]
            logbook.record(generation=generation, best=best, evaluations=evaluations, **record)
            logging.info(
                f"Generation {generation}: best {best / 1e3:.2f} t, "
                f"mean {record['mean'] / 1e3:.2f} t, feasible {record['feasible_fraction']:.0%}"
            )

    best_genome = Genome.from_list(hall_of_fame[0])
    evaluation = evaluator.evaluate(best_genome)
    if not evaluation.feasible:
        raise NoFeasibleIndividual(
            f"no feasible design in {config.generations} generations "
            f"(best: {evaluation.constraint}, {evaluation.message})"
        )
    return OptimizationResult(
        genome=best_genome,
        vehicle=evaluation.vehicle,
        fitness=evaluation.fitness,
        seed=config.seed,
        space=space,
        objective=objective,
        history=[dict(entry) for entry in logbook],
    )
