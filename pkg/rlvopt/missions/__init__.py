from rlvopt.missions.library import (
    GTO,
    LEO,
    LossComponent,
    MissionSpec,
    budget_total,
    builtin_missions,
    get_mission,
    loss_budget_breakdown,
)

__all__ = [
    "GTO",
    "LEO",
    "LossComponent",
    "MissionSpec",
    "budget_total",
    "builtin_missions",
    "get_mission",
    "loss_budget_breakdown",
]
