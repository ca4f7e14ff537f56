"""Recoil-modified line spectra of an emitter trapped in a potential well."""

__version__ = "0.1.0"

from .bessel import bessel_j, bessel_j_sequence
from .errors import (
    AccuracyError,
    DataError,
    DomainError,
    InputError,
    ParseError,
    PhysicsError,
    RecoilLinesError,
    RegimeError,
    SingularityError,
)
from .kinematics import (
    RecoilSolution,
    lamb_dicke,
    recoil_energy,
    recoil_velocity,
    solve_recoil,
    solve_recoil_params,
    trap_amplitude,
    trap_frequency_approx,
    trap_frequency_exact,
    validity_ratio,
)
from .oracle import (
    QuadratureSettings,
    conservation_bisect,
    fourier_sideband_coefficient,
    spectrum_weight_check,
)
from .quantities import (
    CODATA2018,
    Isotope,
    Medium,
    PhysicalConstants,
    energy_kev_to_omega,
    load_isotope_table,
    load_material_table,
    mass_amu_to_kg,
    omega_to_energy_kev,
)
from .relaxation import (
    PhononCheck,
    RelaxationReport,
    emission_rate_ratio,
    hierarchy_report,
    phonon_feasibility,
    relaxation_report,
    relaxation_time_1d,
    relaxation_time_3d,
    sound_field_amplitude,
    sound_wavelength,
)
from .spectrum import (
    Branch,
    LineSpectrum,
    SidebandLine,
    SpectrumConfig,
    auto_truncation_order,
    central_to_sideband_ratio,
    debye_waller_from_phonons,
    debye_waller_from_well_oscillation,
    line_spectrum,
    transition_probability,
)
