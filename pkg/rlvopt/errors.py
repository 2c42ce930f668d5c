"""Exception hierarchy shared by every model layer.

Each error names the constraint it violates and carries a non-negative,
dimensionless violation measure; the optimizer turns both into a graded
penalty, the CLI into an exit code and a message.
"""


class RlvOptError(Exception):
    constraint: str = "model"

    def __init__(self, message: str, violation: float = 1.0, constraint: str | None = None):
        super().__init__(message)
        self.violation = max(float(violation), 0.0)
        if constraint is not None:
            self.constraint = constraint


class ConfigError(RlvOptError):
    constraint = "config"


class GenomeOutOfBounds(ConfigError):
    constraint = "bounds"

    def __init__(self, gene: str, value: float, low: float, high: float):
        span = max(high - low, 1e-12)
        excess = max(low - value, value - high, 0.0) / span
        super().__init__(
            f"{gene} {value:g} outside [{low:g}, {high:g}]", violation=excess
        )
        self.gene = gene


class OutOfTableRange(RlvOptError):
    constraint = "thermo_table"


class DomainError(RlvOptError):
    constraint = "domain"


class NonPhysicalGeometry(RlvOptError):
    constraint = "geometry"


class CorrelationRangeExceeded(RlvOptError):
    constraint = "engine_mass_range"


class CyclePowerInfeasible(RlvOptError):
    constraint = "gg_fraction"


class PerformanceOutOfRange(RlvOptError):
    constraint = "isp_band"


class InfeasibleStage(RlvOptError):
    constraint = "staging"


class NegativeAscentPropellant(InfeasibleStage):
    constraint = "landing_propellant"


class LiftoffFailure(RlvOptError):
    constraint = "acceleration_stage1"


class NonConvergence(RlvOptError):
    constraint = "convergence"


class InfeasibleDesign(RlvOptError):
    def __init__(self, constraint: str, violation: float, message: str | None = None):
        super().__init__(
            message or f"constraint {constraint} violated by {violation:.4g}",
            violation=violation,
            constraint=constraint,
        )


class NoFeasibleIndividual(RlvOptError):
    constraint = "no_feasible"
