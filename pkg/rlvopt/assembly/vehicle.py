from dataclasses import dataclass, field

from rlvopt.assembly.design import DesignPoint
from rlvopt.masses import PayloadBay, StageGeometry, StageMassBudget
from rlvopt.missions import MissionSpec
from rlvopt.propellants import EngineDesign, EnginePerformance
from rlvopt.staging import (
    DeltaVAllocation,
    StagePropellantSplit,
    ballistic_coefficient_root,
    mass_after_reentry,
)
from rlvopt.trajectory import TrajectoryResult, static_acceleration


@dataclass(frozen=True)
class StageResult:
    engine: EngineDesign
    performance: EnginePerformance
    n_engines: int
    geometry: StageGeometry
    budget: StageMassBudget
    propellant: StagePropellantSplit
    iterations: int
    # Isp the propellant masses were sized with; vacuum Isp for the upper stage.
    design_isp: float
    isp_iterations: int = 0
    landing_coefficient: float = 1.0
    trajectory: TrajectoryResult | None = None

    @property
    def structural_mass(self) -> float:
        return self.budget.structural_mass

    @property
    def propellant_mass(self) -> float:
        return self.propellant.m_p_total

    @property
    def structural_coefficient(self) -> float:
        return self.structural_mass / (self.structural_mass + self.propellant_mass)

    @property
    def thrust_vac(self) -> float:
        return self.n_engines * self.performance.thrust_vac

    @property
    def thrust_sl(self) -> float:
        return self.n_engines * self.performance.thrust_sl

    @property
    def massflow(self) -> float:
        return self.n_engines * self.performance.total_massflow

    @property
    def rated_burn_time(self) -> float:
        """Full propellant load over rated engine flow."""
        return self.propellant_mass / self.massflow

    @property
    def length(self) -> float:
        return self.geometry.total_length


@dataclass(frozen=True)
class VehicleDesign:
    mission: MissionSpec
    design: DesignPoint
    allocation: DeltaVAllocation
    payload_bay: PayloadBay
    first_stage: StageResult
    upper_stage: StageResult
    landing_burn_dv: float = 500.0
    flags: tuple[str, ...] = ()
    # constraint -> normalised violation, only filled when constraints are not enforced
    violations: dict[str, float] = field(default_factory=dict)

    @property
    def m0_upper(self) -> float:
        return self.payload_bay.total + self.upper_stage.structural_mass + self.upper_stage.propellant_mass

    @property
    def glow(self) -> float:
        return self.m0_upper + self.first_stage.structural_mass + self.first_stage.propellant_mass

    @property
    def structural_mass_first(self) -> float:
        return self.first_stage.structural_mass

    @property
    def structural_mass_upper(self) -> float:
        return self.upper_stage.structural_mass

    @property
    def total_length(self) -> float:
        return self.first_stage.length + self.upper_stage.length + self.payload_bay.fairing_length

    @property
    def length_to_diameter(self) -> float:
        return self.total_length / (2.0 * self.design.first.radius)

    @property
    def liftoff_acceleration(self) -> float:
        return static_acceleration(self.first_stage.thrust_sl, self.glow)

    @property
    def upper_stage_acceleration(self) -> float:
        return static_acceleration(self.upper_stage.thrust_vac, self.m0_upper)

    @property
    def ballistic_root(self) -> float:
        """sqrt(m/A) of the returning first stage after the reentry burn, t^0.5/m."""
        mass = mass_after_reentry(
            self.first_stage.structural_mass, self.first_stage.design_isp, self.landing_burn_dv
        )
        return ballistic_coefficient_root(mass / 1000.0, self.design.first.radius)

    @property
    def feasible(self) -> bool:
        return not self.violations

    def mass_closure_terms(self) -> list[float]:
        return [
            self.payload_bay.total,
            self.upper_stage.structural_mass,
            self.upper_stage.propellant_mass,
            self.first_stage.structural_mass,
            self.first_stage.propellant_mass,
        ]

    def __repr__(self) -> str:
        return (
            f"VehicleDesign({self.design.combo_label}, GLOW={self.glow / 1e3:.1f} t, "
            f"n1={self.first_stage.n_engines}, dv1={self.allocation.dv_stage1_ascent:.0f} m/s)"
        )
