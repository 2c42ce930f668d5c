"""Virtual assembly of a two-stage vehicle.

The upper stage is sized first by fixed-point iteration on its structural
coefficient. The first stage then carries it: an inner fixed point on the
first-stage structural coefficient sits inside an outer one on the mean
ascent Isp from the trajectory simulation. The first stage gains engines
until it meets the liftoff acceleration limit.
"""

import logging
import math

from rlvopt.assembly.config import AssemblyOptions, Calibration, ConvergenceSettings
from rlvopt.assembly.design import DesignPoint, StageParameters
from rlvopt.assembly.vehicle import StageResult, VehicleDesign
from rlvopt.errors import InfeasibleDesign, LiftoffFailure, NonConvergence
from rlvopt.masses import PayloadBay, assemble_stage_mass, payload_bay_mass, size_stage
from rlvopt.missions import MissionSpec
from rlvopt.propellants import EnginePerformance, evaluate_engine
from rlvopt.staging import (
    DeltaVAllocation,
    StagePropellantSplit,
    first_stage_structural_mass,
    landing_structural_coefficient,
    mass_ratio,
    propellant_split,
    upper_stage_propellant,
)
from rlvopt.trajectory import (
    AtmosphereModel,
    min_acceleration_check,
    simulate_ascent,
    static_acceleration,
)


class _Relaxation:
    def __init__(self, enabled: bool = True):
        self.enabled = enabled
        self.weight = 1.0
        self.previous = 0.0

    def step(self, value: float, residual: float) -> float:
        flipped = residual * self.previous < 0
        if self.enabled and flipped and abs(residual) > 0.5 * abs(self.previous):
            self.weight *= 0.5
        self.previous = residual
        return value + self.weight * residual


def _converged(new: float, old: float, settings: ConvergenceSettings) -> bool:
    return abs(new - old) / old < settings.eps_tolerance


def converge_upper_stage(
    bay: PayloadBay,
    params: StageParameters,
    performance: EnginePerformance,
    dv2: float,
    calibration: Calibration | None = None,
    eps2_init: float | None = None,
) -> StageResult:
    calibration = calibration or Calibration()
    settings = calibration.convergence
    ullage = calibration.masses.tanks.ullage_fraction
    n_engines = calibration.constraints.engines_upper_stage
    isp = performance.isp_vac
    pole = 1.0 / mass_ratio(dv2, isp)

    eps = settings.initial_eps2 if eps2_init is None else eps2_init
    if eps >= pole:
        logging.debug(f"Initial eps2 {eps:.4f} beyond pole {pole:.4f}; restarting at half")
        eps = 0.5 * pole

    def size(eps: float):
        m_p = upper_stage_propellant(bay, dv2, isp, eps)
        geometry = size_stage(
            m_p, params.mixture_ratio, params.combo, params.radius, performance.length, ullage
        )
        budget = assemble_stage_mass(
            geometry,
            [performance] * n_engines,
            params.combo,
            is_first_stage=False,
            calibration=calibration.masses,
        )
        return m_p, geometry, budget

    relax = _Relaxation(settings.relaxation)
    for iteration in range(1, settings.max_iterations + 1):
        m_p, geometry, budget = size(eps)
        eps_new = budget.structural_mass / (budget.structural_mass + m_p)
        logging.debug(f"Upper stage iteration {iteration}: eps {eps:.5f} -> {eps_new:.5f}")
        if _converged(eps_new, eps, settings):
            eps = eps_new
            break
        eps = relax.step(eps, eps_new - eps)
    else:
        raise NonConvergence(
            f"upper stage eps did not converge in {settings.max_iterations} iterations",
            constraint="convergence_upper",
        )

    m_p, geometry, budget = size(eps)
    return StageResult(
        engine=params.engine_design(),
        performance=performance,
        n_engines=n_engines,
        geometry=geometry,
        budget=budget,
        propellant=StagePropellantSplit(m_p_total=m_p, m_p_ascent=m_p),
        iterations=iteration,
        design_isp=isp,
    )


def converge_first_stage(
    m0_upper: float,
    params: StageParameters,
    performance: EnginePerformance,
    n_engines: int,
    allocation: DeltaVAllocation,
    interstage_length: float,
    calibration: Calibration | None = None,
    atmosphere: AtmosphereModel | None = None,
) -> StageResult:
    """Size the reusable first stage under an upper stage of mass ``m0_upper``.

    ``interstage_length`` is the structure between the first-stage tanks and
    the upper-stage tanks (upper engine plus aft dome).
    """
    calibration = calibration or Calibration()
    settings = calibration.convergence
    ullage = calibration.masses.tanks.ullage_fraction
    dv1, dv_landing = allocation.dv_stage1_ascent, allocation.dv_landing
    engines = [performance] * n_engines

    def size(eps: float, isp: float):
        eps_landing = landing_structural_coefficient(dv_landing, isp)
        m_s = first_stage_structural_mass(m0_upper, dv1, isp, eps, eps_landing)
        split = propellant_split(m_s, eps, eps_landing)
        geometry = size_stage(
            split.m_p_total,
            params.mixture_ratio,
            params.combo,
            params.radius,
            performance.length,
            ullage,
        )
        budget = assemble_stage_mass(
            geometry,
            engines,
            params.combo,
            is_first_stage=True,
            calibration=calibration.masses,
            interstage_length=interstage_length,
        )
        return eps_landing, split, geometry, budget

    isp = 0.5 * (performance.isp_vac + performance.isp_sl)
    eps = settings.initial_eps1
    iterations = 0
    for isp_iteration in range(1, settings.max_iterations + 1):
        limit = landing_structural_coefficient(dv_landing, isp) / mass_ratio(dv1, isp)
        if eps >= limit:
            eps = 0.5 * limit

        relax = _Relaxation(settings.relaxation)
        for _ in range(settings.max_iterations):
            iterations += 1
            _, split, _, budget = size(eps, isp)
            eps_new = budget.structural_mass / (budget.structural_mass + split.m_p_total)
            if _converged(eps_new, eps, settings):
                eps = eps_new
                break
            eps = relax.step(eps, eps_new - eps)
        else:
            raise NonConvergence(
                f"first stage eps did not converge in {settings.max_iterations} iterations",
                constraint="convergence_first",
            )

        eps_landing, split, geometry, budget = size(eps, isp)
        glow = m0_upper + budget.structural_mass + split.m_p_total
        trajectory = simulate_ascent(
            performance,
            n_engines,
            glow,
            split.m_p_ascent,
            calibration.gravity_turn,
            atmosphere,
            reference_area=math.pi * params.radius**2,
        )
        logging.debug(
            f"First stage Isp iteration {isp_iteration}: {isp:.2f} -> {trajectory.mean_isp_ascent:.2f} s"
        )
        if abs(trajectory.mean_isp_ascent - isp) < settings.isp_tolerance:
            break
        isp = trajectory.mean_isp_ascent
    else:
        raise NonConvergence(
            f"mean ascent Isp did not converge in {settings.max_iterations} iterations",
            constraint="convergence_isp",
        )

    return StageResult(
        engine=params.engine_design(),
        performance=performance,
        n_engines=n_engines,
        geometry=geometry,
        budget=budget,
        propellant=split,
        iterations=iterations,
        isp_iterations=isp_iteration,
        design_isp=isp,
        landing_coefficient=eps_landing,
        trajectory=trajectory,
    )


def _shortfall(value: float, limit: float) -> float:
    return max(limit - value, 0.0) / limit


def assemble_vehicle(
    design: DesignPoint,
    mission: MissionSpec,
    calibration: Calibration | None = None,
    options: AssemblyOptions | None = None,
    atmosphere: AtmosphereModel | None = None,
) -> VehicleDesign:
    """Build and converge a complete vehicle.

    With ``options.enforce_constraints`` a failed acceleration or slenderness
    check raises ``InfeasibleDesign``; otherwise the violation is recorded on
    the returned design.
    """
    calibration = calibration or Calibration()
    options = options or AssemblyOptions()
    constraints = calibration.constraints
    propulsion = calibration.propulsion
    violations: dict[str, float] = {}
    flags: list[str] = []

    def violated(constraint: str, violation: float, message: str):
        if options.enforce_constraints:
            raise InfeasibleDesign(constraint, violation, message)
        logging.warning(f"Constraint {constraint} not met: {message}")
        violations[constraint] = violation

    allocation = DeltaVAllocation.split(
        mission.dv_total_mps, design.dv_stage1_ascent, calibration.landing
    )
    upper_engine = evaluate_engine(
        design.upper.engine_design(), propulsion, first_stage=False, isp_offset=options.isp_offset
    )
    first_engine = evaluate_engine(
        design.first.engine_design(), propulsion, first_stage=True, isp_offset=options.isp_offset
    )
    if first_engine.flow_separation:
        flags.append("flow_separation")

    bay = payload_bay_mass(
        mission.payload_mass_kg, 2.0 * design.upper.radius, calibration.masses.payload_bay
    )
    upper = converge_upper_stage(
        bay, design.upper, upper_engine, allocation.dv_stage2, calibration
    )
    m0_upper = bay.total + upper.structural_mass + upper.propellant_mass
    upper_acceleration = static_acceleration(upper.thrust_vac, m0_upper)
    if not min_acceleration_check(upper_acceleration, 2, constraints.acceleration):
        violated(
            "acceleration_stage2",
            _shortfall(upper_acceleration, constraints.acceleration.stage2),
            f"upper stage thrust-to-weight {upper_acceleration:.3f}",
        )

    if options.engine_count_override is not None:
        counts = [options.engine_count_override]
    else:
        counts = list(
            range(constraints.min_engines_first_stage, constraints.max_engines_first_stage + 1)
        )
    interstage = upper_engine.length + design.upper.radius

    first = last = None
    shortfall, message = 1.0, "no engine count tried"
    for n_engines in counts:
        try:
            candidate = converge_first_stage(
                m0_upper,
                design.first,
                first_engine,
                n_engines,
                allocation,
                interstage,
                calibration,
                atmosphere,
            )
        except LiftoffFailure as e:
            shortfall, message = 1.0 + e.violation, str(e)
            logging.debug(f"{n_engines} first-stage engines: {e}")
            continue
        if min_acceleration_check(candidate.trajectory, 1, constraints.acceleration):
            first = candidate
            break
        last = candidate
        acceleration = candidate.trajectory.min_acceleration
        shortfall = _shortfall(acceleration, constraints.acceleration.stage1)
        message = f"liftoff thrust-to-weight {acceleration:.3f} with {n_engines} engines"
        logging.debug(message)

    if first is None:
        if last is None:
            raise InfeasibleDesign("acceleration_stage1", shortfall, message)
        first = last
        violated("acceleration_stage1", shortfall, message)

    slenderness = (first.length + upper.length + bay.fairing_length) / (2.0 * design.first.radius)
    if slenderness > constraints.max_length_to_diameter:
        violated(
            "length_to_diameter",
            slenderness / constraints.max_length_to_diameter - 1.0,
            f"length/diameter {slenderness:.1f}",
        )

    return VehicleDesign(
        mission=mission,
        design=design,
        allocation=allocation,
        payload_bay=bay,
        first_stage=first,
        upper_stage=upper,
        landing_burn_dv=calibration.landing.landing_burn_dv,
        flags=tuple(flags),
        violations=violations,
    )
