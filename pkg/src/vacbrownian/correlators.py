"""Boundary-induced electric-field two-point functions near a mirror.

A perfectly reflecting plane at z = 0 modifies the electromagnetic vacuum.
After subtracting the empty-space contribution, the renormalized equal-point
correlators of the electric field a distance z from the plane depend only on
the time separation dt = t' - t'':

    <E_x E_x> = <E_y E_y> = -(dt^2 + 4 z^2) / (pi^2 (dt^2 - 4 z^2)^3)
    <E_z E_z> =  1 / (pi^2 (dt^2 - 4 z^2)^2)

Both kernels are even in dt and singular at |dt| = 2z, the round-trip light
travel time to the mirror.  Only this boundary piece is ever computed here;
the (divergent) Minkowski part is dropped by construction.

Regularized variants displace the time separation off the real axis,
dt -> dt - i*eps, and take the real part.  They are finite for every real
dt and feed the quadrature oracle, which removes the regulator by
extrapolating eps -> 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import LightconeSingularityError

__all__ = [
    "Geometry",
    "RegulatorSpec",
    "DEFAULT_EXCLUSION_WINDOW",
    "corr_transverse",
    "corr_normal",
    "corr_transverse_reg",
    "corr_normal_reg",
    "transverse_kernel_complex",
    "normal_kernel_complex",
    "mean_e_squared",
]

PI_SQ = math.pi * math.pi

# Relative half-width of the refused band around the pole, measured on
# |dt^2 - 4z^2| against 4z^2.
DEFAULT_EXCLUSION_WINDOW = 1e-9


@dataclass(frozen=True)
class Geometry:
    """Distance z > 0 from the reflecting plane (natural length units)."""

    z: float

    def __post_init__(self) -> None:
        if not (self.z > 0.0):
            raise ValueError("distance from the plate must satisfy z > 0")


@dataclass(frozen=True)
class RegulatorSpec:
    """Geometric point-splitting ladder eps0 * ratio^k, k = 0..rungs-1."""

    eps0: float
    ratio: float = 0.5
    rungs: int = 6
    order: int | None = None  # extrapolation order; default rungs - 1

    def __post_init__(self) -> None:
        if not (self.eps0 > 0.0):
            raise ValueError("eps0 must be positive")
        if not (0.0 < self.ratio < 1.0):
            raise ValueError("ladder ratio must lie in (0, 1)")
        if self.rungs < 3:
            raise ValueError("ladder needs at least 3 rungs")
        if self.order is not None and not (2 <= self.order < self.rungs):
            raise ValueError("extrapolation order must lie in [2, rungs)")

    @property
    def ladder(self) -> tuple[float, ...]:
        """Strictly decreasing eps sequence."""
        return tuple(self.eps0 * self.ratio**k for k in range(self.rungs))


def _check_z(z: float) -> None:
    if not (z > 0.0):
        raise ValueError("distance from the plate must satisfy z > 0")


def _check_pole(dt: float, z: float, window: float) -> None:
    four_z_sq = 4.0 * z * z
    if abs(dt * dt - four_z_sq) <= window * four_z_sq:
        raise LightconeSingularityError(
            f"time separation dt={dt!r} lies within the lightcone exclusion "
            f"window around |dt| = 2z (z={z!r})",
            pole_distance=abs(abs(dt) - 2.0 * z),
        )


def corr_transverse(dt: float, z: float, *, window: float = DEFAULT_EXCLUSION_WINDOW) -> float:
    """Transverse (xx = yy) boundary correlator; even in dt.

    Refuses inside the exclusion window around the |dt| = 2z pole instead of
    returning a huge float.
    """
    _check_z(z)
    _check_pole(dt, z, window)
    d = dt * dt - 4.0 * z * z
    return -(dt * dt + 4.0 * z * z) / (PI_SQ * d * d * d)


def corr_normal(dt: float, z: float, *, window: float = DEFAULT_EXCLUSION_WINDOW) -> float:
    """Normal (zz) boundary correlator; even in dt."""
    _check_z(z)
    _check_pole(dt, z, window)
    d = dt * dt - 4.0 * z * z
    return 1.0 / (PI_SQ * d * d)


def transverse_kernel_complex(dt: complex, z: float) -> complex:
    """Analytic continuation of the transverse kernel to complex dt.

    Used by the regularized evaluators and by contour quadrature in the
    oracle; performs no pole checks.
    """
    d = dt * dt - 4.0 * z * z
    return -(dt * dt + 4.0 * z * z) / (PI_SQ * d * d * d)


def normal_kernel_complex(dt: complex, z: float) -> complex:
    """Analytic continuation of the normal kernel to complex dt."""
    d = dt * dt - 4.0 * z * z
    return 1.0 / (PI_SQ * d * d)


def _check_eps(eps: float) -> None:
    if not (eps > 0.0):
        raise ValueError("point-splitting parameter eps must be positive")


def corr_transverse_reg(dt: float, z: float, eps: float) -> float:
    """Re of the transverse kernel at dt - i*eps; finite for all real dt."""
    _check_z(z)
    _check_eps(eps)
    return transverse_kernel_complex(complex(dt, -eps), z).real


def corr_normal_reg(dt: float, z: float, eps: float) -> float:
    """Re of the normal kernel at dt - i*eps; finite for all real dt."""
    _check_z(z)
    _check_eps(eps)
    return normal_kernel_complex(complex(dt, -eps), z).real


def mean_e_squared(z: float) -> float:
    """Renormalized <E^2> at distance z: 3 / (16 pi^2 z^4).

    Equals the coincidence limit 2*corr_transverse(0, z) + corr_normal(0, z).
    """
    _check_z(z)
    return 3.0 / (16.0 * PI_SQ * z**4)
