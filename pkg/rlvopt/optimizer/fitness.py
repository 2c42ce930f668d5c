import logging
from dataclasses import dataclass, field

from rlvopt.assembly import AssemblyOptions, Calibration, VehicleDesign, assemble_vehicle
from rlvopt.errors import RlvOptError
from rlvopt.missions import MissionSpec
from rlvopt.optimizer.genome import Genome, GenomeSpace
from rlvopt.staging import ObjectiveSpec, objective_value

DEFAULT_PENALTY_BASE = 1e7
MAX_PENALTY_VIOLATION = 10.0


def penalty(violation: float, penalty_base: float = DEFAULT_PENALTY_BASE) -> float:
    return penalty_base * (1.0 + min(max(violation, 0.0), MAX_PENALTY_VIOLATION))


@dataclass(frozen=True)
class Evaluation:
    genome: Genome
    fitness: float
    vehicle: VehicleDesign | None = None
    constraint: str | None = None
    message: str = ""

    @property
    def feasible(self) -> bool:
        return self.vehicle is not None


@dataclass(frozen=True)
class Evaluator:
    """Picklable fitness function, shipped whole to worker processes."""

    space: GenomeSpace
    mission: MissionSpec
    objective: ObjectiveSpec
    calibration: Calibration
    penalty_base: float = DEFAULT_PENALTY_BASE
    options: AssemblyOptions = field(default_factory=AssemblyOptions)

    def evaluate(self, genome: Genome) -> Evaluation:
        try:
            self.space.check(genome)
            vehicle = assemble_vehicle(
                self.space.decode(genome), self.mission, self.calibration, self.options
            )
        except RlvOptError as e:
            logging.debug(f"Penalised {genome}: {e.constraint} ({e})")
            return Evaluation(
                genome,
                penalty(e.violation, self.penalty_base),
                constraint=e.constraint,
                message=str(e),
            )
        return Evaluation(genome, objective_value(vehicle, self.objective), vehicle)

    def __call__(self, values) -> tuple[float]:
        return (self.evaluate(Genome.from_list(values)).fitness,)


def fitness(
    genome: Genome,
    space: GenomeSpace,
    mission: MissionSpec,
    objective: ObjectiveSpec,
    calibration: Calibration | None = None,
    penalty_base: float = DEFAULT_PENALTY_BASE,
) -> float:
    """Objective in kg for a feasible genome, a graded penalty otherwise."""
    evaluator = Evaluator(space, mission, objective, calibration or Calibration(), penalty_base)
    return evaluator.evaluate(genome).fitness
