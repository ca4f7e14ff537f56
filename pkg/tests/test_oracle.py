import math

import pytest

from recoil_lines import (
    AccuracyError,
    DomainError,
    QuadratureSettings,
    RegimeError,
    bessel_j,
    conservation_bisect,
    fourier_sideband_coefficient,
    spectrum_weight_check,
    trap_frequency_approx,
    trap_frequency_exact,
)
from recoil_lines.oracle import quadrature_norm_deficit, trapezoid_harmonic
from recoil_lines.quantities import C, HBAR


def test_trivial_coefficients():
    assert fourier_sideband_coefficient(0.0, 0) == pytest.approx(1.0, abs=1e-15)
    for m in (1, -1, 5):
        assert abs(fourier_sideband_coefficient(0.0, m)) <= 1e-15


def test_coefficient_kb2():
    c = fourier_sideband_coefficient(2.0, 1)
    assert c.real == pytest.approx(0.576725, abs=1e-6)
    assert abs(c.real - bessel_j(1, 2.0)) <= 1e-9
    assert abs(c.imag) <= 1e-13


def test_settings_validation():
    with pytest.raises(DomainError):
        QuadratureSettings(panel_count=32)
    with pytest.raises(DomainError):
        QuadratureSettings(panel_count=100)
    with pytest.raises(DomainError):
        QuadratureSettings(tolerance=0.0)


def test_budget_exhausted():
    with pytest.raises(AccuracyError):
        fourier_sideband_coefficient(2.0, 1, QuadratureSettings(max_panels=64))
    # kb = 45 needs well over 64 nodes
    with pytest.raises(AccuracyError):
        fourier_sideband_coefficient(45.0, 3, QuadratureSettings(max_panels=128))
    assert fourier_sideband_coefficient(45.0, 3).real == pytest.approx(bessel_j(3, 45.0), abs=1e-12)


def test_spectral_convergence():
    exact = bessel_j(0, 1.0)
    errors = [abs(trapezoid_harmonic(1.0, 0, n).real - exact) for n in (2, 4, 8)]
    assert errors[0] > 1e-2
    # each doubling squares-or-better the error: super-algebraic decay
    assert errors[1] < errors[0] ** 2
    assert errors[2] < errors[1] ** 2 or errors[2] < 1e-15
    assert abs(trapezoid_harmonic(1.0, 0, 16).real - exact) < 1e-15


@pytest.mark.parametrize("kb", [0.0, 0.5, 2.0, 5.0])
def test_jacobi_anger_closure(kb):
    deficits = [quadrature_norm_deficit(kb, m) for m in (0, 4, 8, 16)]
    assert all(d >= -1e-14 for d in deficits)
    assert deficits == sorted(deficits, reverse=True)
    assert abs(deficits[-1]) < 1e-13


def test_weight_check():
    assert spectrum_weight_check(2.0, 8) <= 1e-9
    assert spectrum_weight_check(0.0, 8) <= 1e-15
    small = spectrum_weight_check(2.0, 4)
    large = spectrum_weight_check(2.0, 30)
    assert large <= max(small, 1e-14)


def test_bisect_matches_exact(fe57):
    w, m = fe57.omega0, fe57.mass_kg
    assert conservation_bisect(w, m) == pytest.approx(trap_frequency_exact(w, m), rel=1e-12)


def test_bisect_matches_approx_for_tiny_ratio():
    m = 1e-25
    w = 1e-8 * m * C**2 / HBAR  # hbar*omega0/(m c^2) = 1e-8
    assert conservation_bisect(w, m) == pytest.approx(trap_frequency_approx(w, m), rel=1e-7)


def test_bracket_contains_single_root():
    m = 1e-26
    for r in (1e-9, 1e-4, 0.05, 0.09):
        w = r * 2 * m * C**2 / HBAR
        k = 2 * m * C**2 / HBAR
        f = lambda x: k * x - (w + x) ** 2
        grid = [w * i / 1000 for i in range(1001)]
        signs = [f(x) > 0 for x in grid]
        assert not signs[0] and signs[-1]
        assert sum(a != b for a, b in zip(signs, signs[1:])) == 1


def test_bisect_regime():
    m = 1e-30
    with pytest.raises(RegimeError):
        conservation_bisect(0.2 * 2 * m * C**2 / HBAR, m)
