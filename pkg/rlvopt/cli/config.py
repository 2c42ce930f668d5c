import pydantic

from rlvopt.assembly import AssemblyOptions
from rlvopt.config import ConfigBase
from rlvopt.missions import MissionSpec, get_mission
from rlvopt.optimizer import AXES, GAConfig, Genome
from rlvopt.optimizer.ga import ProfileName
from rlvopt.propellants import PropellantCombo, parse_combo_pair
from rlvopt.staging import ObjectiveKind, ObjectiveSpec


class StageGenes(ConfigBase):
    radius_m: float
    throat_diameter_m: float
    chamber_pressure_bar: float
    expansion_ratio: float
    mixture_ratio: float


class GenomeConfig(ConfigBase):
    first: StageGenes
    upper: StageGenes
    dv_stage1_ascent_mps: float

    def to_genome(self) -> Genome:
        return Genome(
            r1=self.first.radius_m,
            r2=self.upper.radius_m,
            dt1=self.first.throat_diameter_m,
            dt2=self.upper.throat_diameter_m,
            pc1_bar=self.first.chamber_pressure_bar,
            pc2_bar=self.upper.chamber_pressure_bar,
            eps1=self.first.expansion_ratio,
            eps2=self.upper.expansion_ratio,
            rof1=self.first.mixture_ratio,
            rof2=self.upper.mixture_ratio,
            dv1=self.dv_stage1_ascent_mps,
        )


class StudyConfig(ConfigBase):
    axis: str = "dv_allocation"
    grid: list[float] = pydantic.Field(
        default_factory=lambda: [2500.0, 3000.0, 3500.0, 4000.0, 4500.0]
    )
    # Extra propellant pairs swept alongside ``RunConfig.combo``.
    extra_combos: list[str] = pydantic.Field(default_factory=list)

    @pydantic.field_validator("axis")
    @classmethod
    def _known_axis(cls, axis: str) -> str:
        if axis not in AXES:
            raise ValueError(f"Unknown sweep axis: {axis}, expected one of {', '.join(AXES)}")
        return axis


class RunConfig(ConfigBase):
    """One CLI run: what to fly, what to minimise and where to write."""

    mission: str = "GTO"
    # Inline mission; replaces the named one when given.
    custom_mission: MissionSpec | None = None
    combo: str = "LH2/LH2"
    objective: ObjectiveKind = ObjectiveKind.GLOW
    n_reuses: int = pydantic.Field(default=20, ge=1)
    profile: ProfileName = "desk"
    ga: GAConfig = GAConfig()
    seed: int | None = None
    calibration_path: str | None = None
    output_dir: str = "output"
    genome: GenomeConfig | None = None
    engine_count: int | None = pydantic.Field(default=None, ge=1)
    enforce_constraints: bool = True
    study: StudyConfig = StudyConfig()

    @pydantic.field_validator("combo")
    @classmethod
    def _known_combo(cls, combo: str) -> str:
        parse_combo_pair(combo)
        return combo

    @pydantic.field_validator("mission")
    @classmethod
    def _known_mission(cls, mission: str) -> str:
        get_mission(mission)
        return mission

    def mission_spec(self) -> MissionSpec:
        return self.custom_mission or get_mission(self.mission)

    def combos(self) -> tuple[PropellantCombo, PropellantCombo]:
        return parse_combo_pair(self.combo)

    def objective_spec(self) -> ObjectiveSpec:
        return ObjectiveSpec(kind=self.objective, n_reuses=self.n_reuses)

    def ga_config(self) -> GAConfig:
        config = GAConfig.profile(self.profile, self.ga)
        if self.seed is not None:
            config = config.model_copy(update={"seed": self.seed})
        return config

    def assembly_options(self) -> AssemblyOptions:
        return AssemblyOptions(
            enforce_constraints=self.enforce_constraints,
            engine_count_override=self.engine_count,
        )
