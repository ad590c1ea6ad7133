"""Unit system and physical constants.

Everything internal runs in Lorentz-Heaviside natural units with
c = hbar = 1, so that e^2 = 4*pi*alpha for an electron and the charge is
dimensionless.  The reference length is the meter: masses are stored as
inverse lengths (m -> m*c/hbar), times as light-travel lengths
(t -> c*t).  SI values appear only at the input/output boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "ALPHA",
    "BOLTZMANN_SI",
    "HBAR_SI",
    "C_SI",
    "ELECTRON_MASS_SI",
    "ConstantsTable",
    "ParticleSpec",
    "constants_table",
    "electron_preset",
    "unit_preset",
    "length_si_to_natural",
    "length_natural_to_si",
    "time_si_to_natural",
    "time_natural_to_si",
    "velocity_sq_natural_to_si",
    "velocity_sq_si_to_natural",
    "natural_to_si_temperature",
    "si_to_natural_temperature",
]

# CODATA 2018 recommended values.
ALPHA = 7.2973525693e-3          # fine-structure constant
BOLTZMANN_SI = 1.380649e-23      # J / K (exact)
HBAR_SI = 1.054571817e-34        # J s
C_SI = 299792458.0               # m / s (exact)
ELECTRON_MASS_SI = 9.1093837015e-31  # kg


@dataclass(frozen=True)
class ConstantsTable:
    """CODATA constants used by the package, SI values."""

    alpha: float = ALPHA
    boltzmann: float = BOLTZMANN_SI
    hbar: float = HBAR_SI
    c: float = C_SI
    electron_mass: float = ELECTRON_MASS_SI

    def __post_init__(self) -> None:
        for name in ("alpha", "boltzmann", "hbar", "c", "electron_mass"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"constant {name} must be positive")

    def as_dict(self) -> dict[str, dict[str, object]]:
        return {
            "alpha": {"value": self.alpha, "unit": "dimensionless"},
            "boltzmann": {"value": self.boltzmann, "unit": "J/K"},
            "hbar": {"value": self.hbar, "unit": "J*s"},
            "c": {"value": self.c, "unit": "m/s"},
            "electron_mass": {"value": self.electron_mass, "unit": "kg"},
        }


def constants_table() -> ConstantsTable:
    return ConstantsTable()


@dataclass(frozen=True)
class ParticleSpec:
    """Charge and mass of the test particle in natural units.

    ``e`` is the Lorentz-Heaviside charge (dimensionless), ``m`` the mass
    as an inverse length (1/m).  ``name`` is a label carried into reports.
    """

    e: float
    m: float
    name: str = "custom"

    def __post_init__(self) -> None:
        if not (self.m > 0.0):
            raise ValueError("particle mass must be positive")
        if self.e == 0.0:
            raise ValueError("particle charge must be nonzero")

    @property
    def alpha_eff(self) -> float:
        """e^2 / 4pi, the fine-structure analogue for this charge."""
        return self.e * self.e / (4.0 * math.pi)


def electron_preset() -> ParticleSpec:
    """Electron in natural units with the meter as reference length.

    Charge from e^2 = 4*pi*alpha; mass is the inverse reduced Compton
    wavelength m_e c / hbar, about 2.59e12 per meter.
    """
    e = math.sqrt(4.0 * math.pi * ALPHA)
    m = ELECTRON_MASS_SI * C_SI / HBAR_SI
    return ParticleSpec(e=e, m=m, name="electron")


def unit_preset() -> ParticleSpec:
    """Dimensionless e = m = 1 particle, convenient for unit-free checks."""
    return ParticleSpec(e=1.0, m=1.0, name="unit")


# --- conversions ----------------------------------------------------------
#
# With the meter as the natural length unit the length conversion is the
# identity; it exists so every SI-facing quantity goes through an explicit,
# invertible hop.

def length_si_to_natural(x_m: float) -> float:
    return x_m


def length_natural_to_si(x_nat: float) -> float:
    return x_nat


def time_si_to_natural(t_s: float) -> float:
    """Seconds to light-travel meters (multiply by c)."""
    return t_s * C_SI


def time_natural_to_si(t_nat: float) -> float:
    return t_nat / C_SI


def velocity_sq_natural_to_si(v2_nat: float) -> float:
    """Squared velocity in units of c^2 to (m/s)^2."""
    return v2_nat * C_SI * C_SI


def velocity_sq_si_to_natural(v2_si: float) -> float:
    return v2_si / (C_SI * C_SI)


def natural_to_si_temperature(t_nat: float) -> float:
    """Natural temperature (inverse length, k_B T as energy) to kelvin.

    An energy 1/L in natural units is hbar*c/L in joules; dividing by k_B
    gives kelvin.
    """
    if not math.isfinite(t_nat):
        raise ValueError("temperature must be finite")
    return t_nat * HBAR_SI * C_SI / BOLTZMANN_SI


def si_to_natural_temperature(t_kelvin: float) -> float:
    return t_kelvin * BOLTZMANN_SI / (HBAR_SI * C_SI)
