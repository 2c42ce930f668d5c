"""Vehicle genome: the eleven numbers the optimizer controls.

Discrete genes live on a lattice anchored at their lower bound. The upper
stage radius is tied to the first stage radius by a repair step rather than
a penalty, so operators never leave the feasible box.
"""

import math
from dataclasses import asdict, dataclass, fields

import numpy as np

from rlvopt.assembly import DesignPoint, StageParameters
from rlvopt.constants import BAR
from rlvopt.errors import GenomeOutOfBounds
from rlvopt.propellants import PropellantCombo

_EPS = 1e-9
UPPER_RADIUS_FRACTION = 0.75


@dataclass(frozen=True)
class Genome:
    r1: float
    r2: float
    dt1: float
    dt2: float
    pc1_bar: float
    pc2_bar: float
    eps1: float
    eps2: float
    rof1: float
    rof2: float
    dv1: float

    @classmethod
    def gene_names(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    def as_list(self) -> list[float]:
        return [getattr(self, name) for name in self.gene_names()]

    @classmethod
    def from_list(cls, values) -> "Genome":
        values = [float(v) for v in values]
        if len(values) != len(fields(cls)):
            raise ValueError(f"expected {len(fields(cls))} genes, got {len(values)}")
        return cls(*values)

    def as_dict(self) -> dict[str, float]:
        return asdict(self)


@dataclass(frozen=True)
class GeneSpec:
    name: str
    label: str
    low: float
    high: float
    # None for continuous genes.
    step: float | None = None

    @property
    def n_steps(self) -> int:
        return int(round((self.high - self.low) / self.step))

    def snap(self, value: float) -> float:
        value = min(max(value, self.low), self.high)
        if self.step is None:
            return value
        index = round((value - self.low) / self.step)
        return round(self.low + index * self.step, 10)

    def sample(self, rng: np.random.Generator) -> float:
        if self.step is None:
            return float(rng.uniform(self.low, self.high))
        return round(self.low + self.step * int(rng.integers(0, self.n_steps + 1)), 10)

    def contains(self, value: float) -> bool:
        return self.low - _EPS <= value <= self.high + _EPS

    def check(self, value: float):
        if not self.contains(value):
            raise GenomeOutOfBounds(self.label, value, self.low, self.high)


def _ceil_to(value: float, step: float) -> float:
    return round(math.ceil(value / step - _EPS) * step, 10)


class GenomeSpace:
    """Bounds and lattice of every gene for one propellant pairing.

    ``frozen`` pins genes to fixed values, e.g. the first-stage delta-v in an
    allocation sweep.
    """

    RADIUS = (1.5, 4.0, 0.1)
    THROAT = (0.1, 1.0, None)
    PC_FIRST = (50.0, 200.0, 5.0)
    PC_UPPER = (20.0, 200.0, 5.0)
    EPS_FIRST = (10.0, 90.0, 5.0)
    EPS_UPPER = (80.0, 200.0, 5.0)
    ROF_STEP = 0.1
    DV1 = (2000.0, 5000.0, 100.0)

    def __init__(
        self,
        first: PropellantCombo,
        upper: PropellantCombo,
        frozen: dict[str, float] | None = None,
    ):
        self.first = first
        self.upper = upper
        rof1 = (_ceil_to(first.rof_bounds[0], self.ROF_STEP), first.rof_bounds[1], self.ROF_STEP)
        rof2 = (_ceil_to(upper.rof_bounds[0], self.ROF_STEP), upper.rof_bounds[1], self.ROF_STEP)
        self.genes: dict[str, GeneSpec] = {
            "r1": GeneSpec("r1", "first stage radius", *self.RADIUS),
            "r2": GeneSpec("r2", "upper stage radius", *self.RADIUS),
            "dt1": GeneSpec("dt1", "first stage throat diameter", *self.THROAT),
            "dt2": GeneSpec("dt2", "upper stage throat diameter", *self.THROAT),
            "pc1_bar": GeneSpec("pc1_bar", "first stage chamber pressure", *self.PC_FIRST),
            "pc2_bar": GeneSpec("pc2_bar", "upper stage chamber pressure", *self.PC_UPPER),
            "eps1": GeneSpec("eps1", "first stage expansion ratio", *self.EPS_FIRST),
            "eps2": GeneSpec("eps2", "upper stage expansion ratio", *self.EPS_UPPER),
            "rof1": GeneSpec("rof1", "first stage mixture ratio", *rof1),
            "rof2": GeneSpec("rof2", "upper stage mixture ratio", *rof2),
            "dv1": GeneSpec("dv1", "first stage delta-v", *self.DV1),
        }
        self.frozen = dict(frozen or {})
        for name, value in self.frozen.items():
            if name not in self.genes:
                raise ValueError(f"Unknown gene: {name}")
            self.genes[name].check(value)

    @property
    def names(self) -> list[str]:
        return Genome.gene_names()

    def specs(self) -> list[GeneSpec]:
        return [self.genes[name] for name in self.names]

    def is_free(self, name: str) -> bool:
        return name not in self.frozen

    def upper_radius_bounds(self, r1: float) -> tuple[float, float]:
        step = self.RADIUS[2]
        return max(_ceil_to(UPPER_RADIUS_FRACTION * r1, step), self.RADIUS[0]), r1

    def repair(self, values: list[float]) -> list[float]:
        """Snap to the lattice, apply frozen genes and tie r2 to r1. In place."""
        for i, spec in enumerate(self.specs()):
            values[i] = self.frozen.get(spec.name, spec.snap(values[i]))
        i1, i2 = self.names.index("r1"), self.names.index("r2")
        low, high = self.upper_radius_bounds(values[i1])
        values[i2] = round(min(max(values[i2], low), high), 10)
        return values

    def sample(self, rng: np.random.Generator) -> list[float]:
        values = [spec.sample(rng) for spec in self.specs()]
        return self.repair(values)

    def resample_gene(self, values: list[float], index: int, rng: np.random.Generator) -> float:
        spec = self.specs()[index]
        if not self.is_free(spec.name):
            return values[index]
        if spec.name == "r2":
            low, high = self.upper_radius_bounds(values[self.names.index("r1")])
            return GeneSpec("r2", spec.label, low, high, spec.step).sample(rng)
        return spec.sample(rng)

    def check(self, genome: Genome):
        """Raise ``GenomeOutOfBounds`` for the first gene outside its interval."""
        for spec in self.specs():
            spec.check(getattr(genome, spec.name))
        low, high = self.upper_radius_bounds(genome.r1)
        if not low - _EPS <= genome.r2 <= high + _EPS:
            raise GenomeOutOfBounds("upper stage radius", genome.r2, low, high)

    def decode(self, genome: Genome) -> DesignPoint:
        return DesignPoint(
            first=StageParameters(
                combo=self.first,
                radius=genome.r1,
                throat_diameter=genome.dt1,
                chamber_pressure=genome.pc1_bar * BAR,
                expansion_ratio=genome.eps1,
                mixture_ratio=genome.rof1,
            ),
            upper=StageParameters(
                combo=self.upper,
                radius=genome.r2,
                throat_diameter=genome.dt2,
                chamber_pressure=genome.pc2_bar * BAR,
                expansion_ratio=genome.eps2,
                mixture_ratio=genome.rof2,
            ),
            dv_stage1_ascent=genome.dv1,
        )

    @staticmethod
    def encode(design: DesignPoint) -> Genome:
        return Genome(
            r1=design.first.radius,
            r2=design.upper.radius,
            dt1=design.first.throat_diameter,
            dt2=design.upper.throat_diameter,
            pc1_bar=design.first.chamber_pressure_bar,
            pc2_bar=design.upper.chamber_pressure_bar,
            eps1=design.first.expansion_ratio,
            eps2=design.upper.expansion_ratio,
            rof1=design.first.mixture_ratio,
            rof2=design.upper.mixture_ratio,
            dv1=design.dv_stage1_ascent,
        )

    def __repr__(self) -> str:
        return f"GenomeSpace({self.first.name}/{self.upper.name}, frozen={self.frozen})"
