"""Recoil kinematics of an oscillator trapped in a potential well.

Absorbing a quantum hbar*(omega0 + Omega) puts the emitter into the first
excited level of the well, so momentum and energy balance read

    hbar*(omega0 + Omega)/c = m*V
    hbar*Omega              = m*V**2/2

To leading order in hbar*omega0/(2mc^2) this gives Omega = hbar*omega0**2/(2mc^2),
V = hbar*omega0/(mc) and an oscillation amplitude b = V/Omega = 2c/omega0.
Note b carries the factor 2; with it the Lamb-Dicke parameter k*b is exactly 2
for every emitter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, RegimeError
from .quantities import C, HBAR, Isotope

# The model is only claimed deep inside hbar*omega0 << 2mc^2.
REGIME_LIMIT = 0.1


@dataclass(frozen=True)
class RecoilSolution:
    omega0: float
    recoil_energy: float
    trap_omega: float
    recoil_velocity: float
    amplitude_b: float
    lamb_dicke: float
    excursion: float
    validity_ratio: float
    mass: float


def _check_positive(**values: float) -> None:
    for name, value in values.items():
        if not value > 0:
            raise DomainError(f"{name} must be > 0, got {value}")


def validity_ratio(omega0: float, mass: float) -> float:
    """hbar*omega0 / (2 m c^2)."""
    _check_positive(omega0=omega0, mass=mass)
    return HBAR * omega0 / (2.0 * mass * C**2)


def recoil_energy(omega0: float, mass: float) -> float:
    """Free-recoil energy (hbar*omega0)^2 / (2 m c^2) in joules."""
    _check_positive(omega0=omega0, mass=mass)
    return (HBAR * omega0) ** 2 / (2.0 * mass * C**2)


def trap_frequency_approx(omega0: float, mass: float) -> float:
    _check_positive(omega0=omega0, mass=mass)
    return HBAR * omega0**2 / (2.0 * mass * C**2)


def trap_frequency_exact(omega0: float, mass: float) -> float:
    """Smaller positive root of Omega^2 + (2*omega0 - K)*Omega + omega0^2 = 0, K = 2mc^2/hbar.

    The large root is formed first and the small one recovered from the
    product of roots (omega0^2); the naive formula loses every digit here
    because K exceeds omega0 by seven orders of magnitude for real nuclei.
    """
    ratio = validity_ratio(omega0, mass)
    if ratio >= REGIME_LIMIT:
        raise RegimeError(
            f"hbar*omega0/(2mc^2) = {ratio:.3g} is not small (limit {REGIME_LIMIT})"
        )
    # Work in units of K to keep everything O(1); r = omega0/K.
    r = ratio
    disc = 1.0 - 4.0 * r  # discriminant / K^2
    if disc <= 0:
        raise RegimeError("conservation laws have no real solution")
    big = 0.5 * ((1.0 - 2.0 * r) + math.sqrt(disc))
    small = r * r / big
    return small * (omega0 / r)


def recoil_velocity(omega0: float, mass: float) -> float:
    _check_positive(omega0=omega0, mass=mass)
    return HBAR * omega0 / (mass * C)


def trap_amplitude(omega0: float, mass: float) -> float:
    """Oscillation amplitude b = V/Omega = 2c/omega0 (independent of mass)."""
    _check_positive(omega0=omega0, mass=mass)
    return 2.0 * C / omega0


def lamb_dicke(omega0: float, b: float) -> float:
    if not omega0 > 0:
        raise DomainError(f"omega0 must be > 0, got {omega0}")
    if not b >= 0:
        raise DomainError(f"b must be >= 0, got {b}")
    return omega0 * b / C


def solve_recoil_params(omega0: float, mass: float) -> RecoilSolution:
    ratio = validity_ratio(omega0, mass)
    if ratio >= REGIME_LIMIT:
        raise RegimeError(
            f"hbar*omega0/(2mc^2) = {ratio:.3g} is not small (limit {REGIME_LIMIT})"
        )
    b = trap_amplitude(omega0, mass)
    return RecoilSolution(
        omega0=omega0,
        recoil_energy=recoil_energy(omega0, mass),
        trap_omega=trap_frequency_approx(omega0, mass),
        recoil_velocity=recoil_velocity(omega0, mass),
        amplitude_b=b,
        lamb_dicke=lamb_dicke(omega0, b),
        excursion=2.0 * b,
        validity_ratio=ratio,
        mass=mass,
    )


def solve_recoil(isotope: Isotope) -> RecoilSolution:
    return solve_recoil_params(isotope.omega0, isotope.mass_kg)
