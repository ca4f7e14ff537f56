"""Brute-force cross-checks for the analytic routines.

These deliberately share no code with ``bessel`` or ``kinematics``:

* sideband amplitudes come from the trapezoid rule applied to
  (1/2pi) * integral exp(i*kb*sin(t) - i*m*t) dt (the Jacobi-Anger harmonic),
  which converges spectrally for this entire, periodic integrand;
* the trap frequency comes from bisection on the raw conservation-law
  residual rather than from the closed-form root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bessel import bessel_j
from .errors import AccuracyError, DomainError, RegimeError
from .kinematics import REGIME_LIMIT
from .quantities import C, HBAR


@dataclass(frozen=True)
class QuadratureSettings:
    """``panel_count`` is the starting grid; it is doubled until two successive
    estimates agree to ``tolerance`` or the grid would exceed ``max_panels``.
    A budget at or below ``panel_count`` can never confirm convergence."""

    panel_count: int = 64
    tolerance: float = 1e-13
    max_panels: int = 1 << 16

    def __post_init__(self) -> None:
        n = self.panel_count
        if n < 64 or n & (n - 1):
            raise DomainError(f"panel_count must be a power of two >= 64, got {n}")
        if self.max_panels < 1:
            raise DomainError(f"max_panels must be >= 1, got {self.max_panels}")
        if not self.tolerance > 0:
            raise DomainError(f"tolerance must be > 0, got {self.tolerance}")


def trapezoid_harmonic(kb: float, order: int, panels: int) -> complex:
    """Single trapezoid estimate of the m-th harmonic with ``panels`` points."""
    if panels < 1:
        raise DomainError(f"panels must be >= 1, got {panels}")
    theta = 2.0 * np.pi * np.arange(panels) / panels
    return complex(np.mean(np.exp(1j * (kb * np.sin(theta) - order * theta))))


def fourier_sideband_coefficient(
    kb: float, order: int, settings: QuadratureSettings | None = None
) -> complex:
    """Numerical m-th Fourier coefficient of exp(i*kb*sin(theta)); equals J_m(kb)."""
    settings = settings or QuadratureSettings()
    if not math.isfinite(kb) or abs(kb) > 50:
        raise DomainError(f"|kb| must be <= 50, got {kb}")
    if kb == 0:
        # integrand is exp(-i*m*t): orthogonality, no quadrature needed
        return complex(1.0 if order == 0 else 0.0)
    n = settings.panel_count
    estimate = trapezoid_harmonic(kb, order, n)
    while 2 * n <= settings.max_panels:
        # Reuse the old nodes: new estimate = mean over old nodes and midpoints.
        theta = 2.0 * np.pi * (np.arange(n) + 0.5) / n
        mids = complex(np.mean(np.exp(1j * (kb * np.sin(theta) - order * theta))))
        refined = 0.5 * (estimate + mids)
        n *= 2
        if abs(refined - estimate) <= settings.tolerance:
            if abs(refined.imag) > settings.tolerance:
                raise AccuracyError(
                    f"imaginary residue {refined.imag:.3g} exceeds tolerance"
                )
            return refined
        estimate = refined
    raise AccuracyError(
        f"trapezoid rule for kb={kb}, m={order} did not converge to "
        f"{settings.tolerance:g} within {settings.max_panels} panels"
    )


def conservation_bisect(omega0: float, mass: float, rel_width: float = 1e-14) -> float:
    """Trap frequency from the absorption conservation laws by plain bisection.

    Root of f(W) = 2mc^2*hbar*W - hbar^2*(omega0 + W)^2 on (0, omega0), scaled
    by 1/hbar^2 so the residual stays in a comfortable floating-point range.
    """
    if not omega0 > 0 or not mass > 0:
        raise DomainError("omega0 and mass must be > 0")
    stiffness = 2.0 * mass * C**2 / HBAR
    if omega0 / stiffness >= REGIME_LIMIT:
        raise RegimeError(f"hbar*omega0/(2mc^2) = {omega0 / stiffness:.3g} is not small")

    def residual(w: float) -> float:
        return stiffness * w - (omega0 + w) ** 2

    lo, hi = 0.0, omega0
    f_lo, f_hi = residual(lo), residual(hi)
    if not (f_lo < 0 < f_hi):
        raise RegimeError("no sign change of the conservation residual on (0, omega0)")
    while hi - lo > rel_width * hi:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if residual(mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def spectrum_weight_check(
    kb: float, max_order: int, settings: QuadratureSettings | None = None
) -> float:
    """max over |m| <= M of |J_m(kb)^2 - (quadrature coefficient)^2|."""
    if max_order < 0:
        raise DomainError(f"max_order must be >= 0, got {max_order}")
    worst = 0.0
    for m in range(-max_order, max_order + 1):
        analytic = bessel_j(m, kb) ** 2
        numeric = fourier_sideband_coefficient(kb, m, settings).real ** 2
        worst = max(worst, abs(analytic - numeric))
    return worst


def quadrature_norm_deficit(
    kb: float, max_order: int, settings: QuadratureSettings | None = None
) -> float:
    """1 - sum_{|m|<=M} c_m^2 using quadrature coefficients only."""
    total = sum(
        fourier_sideband_coefficient(kb, m, settings).real ** 2
        for m in range(-max_order, max_order + 1)
    )
    return 1.0 - total
