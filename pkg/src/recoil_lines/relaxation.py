"""Sound emission by the trapped oscillator and the resulting relaxation times.

The one-dimensional formulas are written with a *linear* mass density (kg/m):
``m / (rho_1d * lambda_s)`` is then the mass of the oscillator over the mass of
the chain segment one sound wavelength long, which is the only reading that is
dimensionless. The three-dimensional estimate uses the bulk density directly.

The printed 1D intensity (hbar*Omega / I = 16 rho lambda / (m Omega)) and the
printed 1D relaxation time (8 rho lambda / (pi m Omega)) differ by exactly 2*pi.
Both are evaluated as printed and the ratio is reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .kinematics import RecoilSolution
from .quantities import C, Medium

DEFAULT_MARGIN = 10.0


@dataclass(frozen=True)
class PhononCheck:
    velocity_ratio: float
    momentum_ratio: float
    ks_b: float

    def all_small(self, margin: float = DEFAULT_MARGIN) -> bool:
        return max(self.velocity_ratio, self.momentum_ratio, self.ks_b) * margin < 1.0


@dataclass(frozen=True)
class RelaxationReport:
    sound_wavelength: float
    phonons: PhononCheck
    tau_3d: float
    period: float
    margin: float
    sound_field_amplitude: float
    energy_balance_ratio: float
    tau_1d: float | None = None
    mass_ratio_1d: float | None = None
    emission_rate_ratio: float | None = None
    hierarchy_ok_period: bool = False
    hierarchy_ok_lifetime: bool | None = None
    dim: int = 3

    @property
    def tau(self) -> float:
        return self.tau_1d if self.dim == 1 else self.tau_3d


def _positive(**values: float) -> None:
    for name, value in values.items():
        if not value > 0:
            raise DomainError(f"{name} must be > 0, got {value}")


def sound_wavelength(trap_omega: float, medium: Medium) -> float:
    """Wavelength of sound at the trap frequency, 2*pi*v_s/Omega."""
    _positive(trap_omega=trap_omega)
    return 2.0 * math.pi * medium.sound_speed / trap_omega


def phonon_feasibility(solution: RecoilSolution, medium: Medium) -> PhononCheck:
    """Dimensionless ratios showing the recoiling emitter cannot emit a phonon directly.

    velocity_ratio = V/v_s; momentum_ratio = (hbar*Omega/v_s)/(hbar*omega0/c),
    evaluated as (hbar*omega0/2mc^2)*(c/v_s); ks_b = (Omega/v_s)*b.
    """
    v_s = medium.sound_speed
    return PhononCheck(
        velocity_ratio=solution.recoil_velocity / v_s,
        momentum_ratio=solution.validity_ratio * C / v_s,
        ks_b=solution.trap_omega / v_s * solution.amplitude_b,
    )


def sound_field_amplitude(mass: float, b: float, trap_omega: float, medium: Medium) -> float:
    """Amplitude m*b*Omega^2/(8 v_s^2) of the radiated density wave.

    The point-mass source makes this a density per unit cross-section
    (kg/m^3 * m^2 per m of chain); it is the prefactor of two counter-running
    sinusoids at wavenumber Omega/v_s.
    """
    _positive(mass=mass, b=b, trap_omega=trap_omega)
    return mass * b * trap_omega**2 / (8.0 * medium.sound_speed**2)


def emission_rate_ratio(mass: float, medium: Medium, trap_omega: float) -> float:
    """Sound intensity over the phonon energy, (1/16)*(m/(rho_1d*lambda_s))*Omega, in 1/s."""
    _positive(mass=mass, trap_omega=trap_omega)
    lam = sound_wavelength(trap_omega, medium)
    return mass / (medium.linear_density * lam) * trap_omega / 16.0


def relaxation_time_1d(mass: float, medium: Medium, trap_omega: float) -> float:
    _positive(mass=mass, trap_omega=trap_omega)
    lam = sound_wavelength(trap_omega, medium)
    return 8.0 * medium.linear_density * lam / (math.pi * mass * trap_omega)


def relaxation_time_3d(mass: float, medium: Medium, omega0: float, trap_omega: float) -> float:
    """3*(rho*lambda_s^3/m)*(omega0/(pi^2 Omega^2)) with bulk density rho."""
    _positive(mass=mass, omega0=omega0, trap_omega=trap_omega)
    lam = sound_wavelength(trap_omega, medium)
    return 3.0 * (medium.mass_density * lam**3 / mass) * omega0 / (math.pi**2 * trap_omega**2)


def energy_balance_ratio(mass: float, medium: Medium, trap_omega: float) -> float:
    """(hbar*Omega / I) divided by the printed 1D relaxation time; 2*pi as printed."""
    quantum_time = 1.0 / emission_rate_ratio(mass, medium, trap_omega)
    return quantum_time / relaxation_time_1d(mass, medium, trap_omega)


def hierarchy_report(
    tau: float,
    trap_omega: float,
    excited_lifetime: float | None = None,
    margin: float = DEFAULT_MARGIN,
) -> dict:
    """Check tau >> trap period and (if known) tau >> excited-state lifetime."""
    _positive(tau=tau, trap_omega=trap_omega, margin=margin)
    period = 2.0 * math.pi / trap_omega
    return {
        "period": period,
        "hierarchy_ok_period": tau > margin * period,
        "hierarchy_ok_lifetime": None if excited_lifetime is None else tau > margin * excited_lifetime,
    }


def relaxation_report(
    solution: RecoilSolution,
    medium: Medium,
    dim: int = 3,
    margin: float = DEFAULT_MARGIN,
    excited_lifetime: float | None = None,
) -> RelaxationReport:
    """Everything about the low-frequency motion's decay for one emitter in one medium.

    ``dim=1`` needs ``medium.lattice_spacing``. Without it the 1D relaxation time is
    left out, and the energy-balance ratio is evaluated with the column density
    rho*lambda_s^2 instead. The ratio does not depend on the density, so its value
    is the same either way.
    """
    if dim not in (1, 3):
        raise DomainError(f"dim must be 1 or 3, got {dim}")
    if dim == 1 and medium.lattice_spacing is None:
        raise DomainError("dim=1 needs a lattice spacing")
    mass, omega = solution.mass, solution.trap_omega
    lam = sound_wavelength(omega, medium)
    tau_3d = relaxation_time_3d(mass, medium, solution.omega0, omega)

    tau_1d = mass_ratio = rate = None
    if medium.lattice_spacing is not None:
        tau_1d = relaxation_time_1d(mass, medium, omega)
        mass_ratio = mass / (medium.linear_density * lam)
        rate = emission_rate_ratio(mass, medium, omega)
        balance_medium = medium
    else:
        balance_medium = Medium(
            medium.mass_density, medium.sound_speed, lattice_spacing=lam, name=medium.name
        )
    balance = energy_balance_ratio(mass, balance_medium, omega)

    tau = tau_1d if dim == 1 else tau_3d
    flags = hierarchy_report(tau, omega, excited_lifetime, margin)
    return RelaxationReport(
        sound_wavelength=lam,
        phonons=phonon_feasibility(solution, medium),
        tau_3d=tau_3d,
        period=flags["period"],
        margin=margin,
        sound_field_amplitude=sound_field_amplitude(mass, solution.amplitude_b, omega, medium),
        energy_balance_ratio=balance,
        tau_1d=tau_1d,
        mass_ratio_1d=mass_ratio,
        emission_rate_ratio=rate,
        hierarchy_ok_period=flags["hierarchy_ok_period"],
        hierarchy_ok_lifetime=flags["hierarchy_ok_lifetime"],
        dim=dim,
    )
