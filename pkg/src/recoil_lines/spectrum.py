"""Sideband line spectrum of the trapped oscillator.

Phase modulation by the trap motion splits the carrier into lines labelled by
the Bessel order m with amplitude J_m(kb). Recoil shifts the grid by one trap
quantum: an emitted line of order m sits at omega0 + (m - 1)*Omega, an absorbed
one at omega0 + (m + 1)*Omega. So the line exactly at omega0 carries J_1^2 (m = +1
in emission, m = -1 in absorption) and the recoil-shifted lines omega0 -/+ Omega
carry J_0^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .bessel import MAX_ORDER, bessel_j, bessel_j_sequence
from .errors import DomainError, SingularityError
from .quantities import C, E_CHARGE, EPS0, H

DEFAULT_EPSILON = 1e-12


class Branch(str, Enum):
    EMISSION = "emission"
    ABSORPTION = "absorption"

    @property
    def shift(self) -> int:
        """Offset (in units of Omega) between Bessel order and line position."""
        return -1 if self is Branch.EMISSION else 1

    def occupation_factor(self, n: int) -> int:
        return n + 1 if self is Branch.EMISSION else n


@dataclass(frozen=True)
class SidebandLine:
    order: int
    frequency: float
    offset: int
    weight: float
    branch: Branch


@dataclass(frozen=True)
class SpectrumConfig:
    """``max_order=None`` picks the truncation from ``epsilon``."""

    kb: float
    max_order: int | None = None
    photon_occupation: int = 0
    suppression_w: float = 0.0
    epsilon: float = DEFAULT_EPSILON

    def __post_init__(self) -> None:
        if not self.kb >= 0:
            raise DomainError(f"kb must be >= 0, got {self.kb}")
        if self.max_order is not None and not 0 <= self.max_order <= MAX_ORDER:
            raise DomainError(f"max_order must be in [0, {MAX_ORDER}], got {self.max_order}")
        if self.photon_occupation < 0:
            raise DomainError(f"photon occupation must be >= 0, got {self.photon_occupation}")
        if not self.suppression_w >= 0 or not math.isfinite(self.suppression_w):
            raise DomainError(f"W must be finite and >= 0, got {self.suppression_w}")
        if not 0 < self.epsilon < 1:
            raise DomainError(f"epsilon must be in (0, 1), got {self.epsilon}")


@dataclass(frozen=True)
class LineSpectrum:
    lines: tuple[SidebandLine, ...]
    truncation_order: int
    normalization_deficit: float
    suppression_factor: float
    omega0: float = 0.0
    trap_omega: float = 0.0

    @property
    def total_weight(self) -> float:
        return math.fsum(line.weight for line in self.lines)

    def line_at_offset(self, offset: int) -> SidebandLine:
        for line in self.lines:
            if line.offset == offset:
                return line
        raise KeyError(offset)


def _weights_tail(kb: float) -> list[float]:
    """J_m(kb)^2 for m = 0..N with N large enough that the rest is below 1e-34."""
    if kb == 0.0:
        return [1.0]
    nmax = min(MAX_ORDER, math.ceil(kb) + 40 + math.ceil(6.0 * math.sqrt(kb)))
    return [v * v for v in bessel_j_sequence(nmax, kb)]


def truncation_deficit(kb: float, max_order: int) -> float:
    """1 - sum_{|m|<=M} J_m(kb)^2, summed as the (non-negative) tail 2*sum_{m>M} J_m^2."""
    sq = _weights_tail(kb)
    return 2.0 * math.fsum(sq[max_order + 1 :])


def auto_truncation_order(kb: float, epsilon: float = DEFAULT_EPSILON) -> int:
    """Smallest M with 1 - sum_{|m|<=M} J_m(kb)^2 <= epsilon."""
    if not kb >= 0:
        raise DomainError(f"kb must be >= 0, got {kb}")
    if not 0 < epsilon < 1:
        raise DomainError(f"epsilon must be in (0, 1), got {epsilon}")
    sq = _weights_tail(kb)
    # tails[M] = 2 * sum_{m > M} sq[m]
    tail = 0.0
    tails = [0.0] * len(sq)
    for m in range(len(sq) - 1, -1, -1):
        tails[m] = tail
        tail += 2.0 * sq[m]
    for m, t in enumerate(tails):
        if t <= epsilon:
            return m
    raise DomainError(f"kb={kb} needs more than {MAX_ORDER} orders for epsilon={epsilon}")


def line_spectrum(
    omega0: float,
    trap_omega: float,
    config: SpectrumConfig,
    branch: Branch | str = Branch.EMISSION,
) -> LineSpectrum:
    """Lines for |m| <= M with weight J_m^2(kb) * exp(-W) * occupation factor.

    Emission uses (n + 1), so n = 0 is spontaneous emission; absorption uses n
    and is identically zero for an empty field mode.
    """
    if not omega0 > trap_omega > 0:
        raise DomainError("need omega0 > trap_omega > 0")
    branch = Branch(branch)
    kb = config.kb
    if kb > 50:
        raise DomainError(f"kb must be <= 50, got {kb}")
    if config.max_order is None:
        order = auto_truncation_order(kb, config.epsilon)
    else:
        order = config.max_order

    jvals = bessel_j_sequence(order, kb) if kb > 0 else [1.0] + [0.0] * order
    suppression = math.exp(-config.suppression_w)
    scale = suppression * branch.occupation_factor(config.photon_occupation)
    lines = []
    for m in range(-order, order + 1):
        offset = m + branch.shift
        lines.append(
            SidebandLine(
                order=m,
                frequency=omega0 + offset * trap_omega,
                offset=offset,
                weight=jvals[abs(m)] ** 2 * scale,
                branch=branch,
            )
        )
    return LineSpectrum(
        lines=tuple(lines),
        truncation_order=order,
        normalization_deficit=truncation_deficit(kb, order),
        suppression_factor=suppression,
        omega0=omega0,
        trap_omega=trap_omega,
    )


def central_to_sideband_ratio(kb: float) -> float:
    """Intensity of the line at omega0 over the recoil-shifted line, J_1^2/J_0^2."""
    j0 = bessel_j(0, kb)
    if abs(j0) <= 1e-14:
        raise SingularityError(f"J_0({kb}) vanishes; ratio is undefined")
    return (bessel_j(1, kb) / j0) ** 2


def transition_probability(
    omega0: float,
    dipole_sq: float,
    kb: float,
    order: int,
    n: int = 0,
    branch: Branch | str = Branch.EMISSION,
) -> float:
    """Transition probability per unit oscillation density, SI units.

    (8*pi*e^2/(h*c^3)) * omega0^2 * dipole_sq * J_order^2(kb) * <cos^2> * occupation,
    with e^2 -> e^2/(4*pi*eps0) and <cos^2 delta> = 1/2. The expression is a
    rate only once multiplied by the spectral density of the field mode, which
    the caller must supply; the returned number is therefore dimensionless.
    ``dipole_sq`` is |x_cd|^2 + |y_cd|^2 in m^2.
    """
    if not dipole_sq >= 0:
        raise DomainError(f"dipole_sq must be >= 0, got {dipole_sq}")
    if not omega0 > 0:
        raise DomainError(f"omega0 must be > 0, got {omega0}")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    branch = Branch(branch)
    e2 = E_CHARGE**2 / (4.0 * math.pi * EPS0)
    prefactor = 8.0 * math.pi * e2 / (H * C**3)
    return (
        prefactor
        * omega0**2
        * dipole_sq
        * bessel_j(order, kb) ** 2
        * 0.5
        * branch.occupation_factor(n)
    )


@dataclass(frozen=True)
class Suppression:
    """Debye-Waller-type factor exp(-W) plus flags for the conditions it assumes."""

    w: float
    conditions: dict[str, bool | None] = field(default_factory=dict)

    @property
    def factor(self) -> float:
        return math.exp(-self.w)


def debye_waller_from_well_oscillation(
    b_s: float,
    omega_s: float | None,
    b: float,
    trap_omega: float,
    margin: float = 10.0,
) -> Suppression:
    """W from a rigid oscillation of the whole well: exp(-W/2) = 1 - b_s^2/b^2.

    Flags: ``fast`` is b_s^2*omega_s^2 > b^2*Omega^2 (None if omega_s is not
    given), ``small`` is b_s^2 * margin <= b^2.
    """
    if not b > 0:
        raise DomainError(f"b must be > 0, got {b}")
    if not b_s >= 0:
        raise DomainError(f"b_s must be >= 0, got {b_s}")
    r = (b_s / b) ** 2
    if r >= 1:
        raise DomainError("b_s must be smaller than b")
    fast = None if omega_s is None else (b_s * omega_s) ** 2 > (b * trap_omega) ** 2
    return Suppression(
        w=-2.0 * math.log1p(-r),
        conditions={"fast": fast, "small": r * margin <= 1.0},
    )


def debye_waller_from_phonons(
    modes: Iterable[tuple[float, float]],
    b: float,
    trap_omega: float,
    margin: float = 10.0,
) -> Suppression:
    """W from a broad phonon spectrum: exp(-W) = 1 - sum(b_i^2)/b^2.

    ``modes`` holds (amplitude b_i, frequency omega_i) pairs. Flags:
    ``broad`` is b^2*Omega^2 * margin <= sum(b_i^2 omega_i^2), ``bounded`` is
    b^2 > sum(b_i^2).
    """
    if not b > 0:
        raise DomainError(f"b must be > 0, got {b}")
    modes = list(modes)
    if any(not bi >= 0 for bi, _ in modes):
        raise DomainError("mode amplitudes must be >= 0")
    r = math.fsum(bi * bi for bi, _ in modes) / (b * b)
    if r >= 1:
        raise DomainError("sum of squared mode amplitudes must be below b^2")
    energy = math.fsum((bi * wi) ** 2 for bi, wi in modes)
    return Suppression(
        w=-math.log1p(-r),
        conditions={
            "broad": (b * trap_omega) ** 2 * margin <= energy if modes else False,
            "bounded": r < 1.0,
        },
    )

