import enum
from dataclasses import dataclass

LOX_DENSITY = 1141.0


class Fuel(str, enum.Enum):
    LH2 = "LH2"
    RP1 = "RP1"
    LCH4 = "LCH4"


@dataclass(frozen=True)
class PropellantCombo:
    """LOX plus one fuel, with storage densities and the properties of the
    fuel-rich gas-generator exhaust used by the cycle model."""

    fuel: Fuel
    fuel_density: float
    rof_bounds: tuple[float, float]
    cryogenic_fuel: bool
    gg_cp: float
    gg_gamma: float
    ox_density: float = LOX_DENSITY
    oxidizer: str = "LOX"

    @property
    def name(self) -> str:
        return self.fuel.value

    def bulk_specific_volume(self, mixture_ratio: float) -> float:
        """Volume per kg of propellant mixture at ROF ``mixture_ratio``, m^3/kg."""
        ox_share = mixture_ratio / (1.0 + mixture_ratio)
        return ox_share / self.ox_density + (1.0 - ox_share) / self.fuel_density


COMBOS: dict[Fuel, PropellantCombo] = {
    Fuel.LH2: PropellantCombo(
        fuel=Fuel.LH2,
        fuel_density=71.0,
        rof_bounds=(4.0, 7.9),
        cryogenic_fuel=True,
        gg_cp=7500.0,
        gg_gamma=1.35,
    ),
    Fuel.RP1: PropellantCombo(
        fuel=Fuel.RP1,
        fuel_density=810.0,
        rof_bounds=(1.5, 3.5),
        cryogenic_fuel=False,
        gg_cp=2400.0,
        gg_gamma=1.25,
    ),
    Fuel.LCH4: PropellantCombo(
        fuel=Fuel.LCH4,
        fuel_density=423.0,
        rof_bounds=(2.0, 4.0),
        cryogenic_fuel=True,
        gg_cp=3000.0,
        gg_gamma=1.25,
    ),
}


def get_combo(name: "str | Fuel") -> PropellantCombo:
    key = str(name.value if isinstance(name, Fuel) else name).upper().replace("-", "")
    for fuel, combo in COMBOS.items():
        if fuel.value == key:
            return combo
    raise ValueError(f"Unknown propellant: {name}")


def parse_combo_pair(text: str) -> tuple[PropellantCombo, PropellantCombo]:
    """Parse ``"RP1/LH2"`` (first stage / upper stage). A single name applies
    to both stages."""
    parts = [p.strip() for p in text.split("/") if p.strip()]
    if len(parts) == 1:
        parts = parts * 2
    if len(parts) != 2:
        raise ValueError(f"Unknown propellant pair: {text}")
    return get_combo(parts[0]), get_combo(parts[1])
