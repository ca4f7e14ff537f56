"""Physical constants, unit conversions and isotope/material tables.

Everything inside the package is SI. Conversions from the units people
actually quote (keV, amu) happen here and nowhere else.

Table format (isotopes)::

    # name  mass_amu  gamma_energy_kev  [excited_lifetime_s]
    57Fe    56.9354   14.4              1.41e-7
    119Sn   118.9033  23.8              -

Materials use the same layout with ``name mass_density sound_speed
[lattice_spacing]`` in kg/m^3, m/s and m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import BinaryIO, Callable, Iterable, TypeVar

from .errors import DataError, DomainError, ParseError


@dataclass(frozen=True)
class PhysicalConstants:
    """CODATA 2018 values, SI units."""

    c: float = 299_792_458.0
    # CODATA prints hbar truncated to 10 digits; h is exact, so derive hbar.
    hbar: float = 6.626_070_15e-34 / (2 * math.pi)
    h: float = 6.626_070_15e-34
    e_charge: float = 1.602_176_634e-19
    amu: float = 1.660_539_066_60e-27
    ev: float = 1.602_176_634e-19
    epsilon0: float = 8.854_187_8128e-12

    def __post_init__(self) -> None:
        for name, value in vars(self).items():
            if not value > 0:
                raise DomainError(f"constant {name} must be positive, got {value}")
        if abs(self.h - 2 * math.pi * self.hbar) > 1e-12 * self.h:
            raise DomainError("h and hbar are inconsistent")


CODATA2018 = PhysicalConstants()
C = CODATA2018.c
HBAR = CODATA2018.hbar
H = CODATA2018.h
E_CHARGE = CODATA2018.e_charge
AMU = CODATA2018.amu
EV = CODATA2018.ev
EPS0 = CODATA2018.epsilon0


@dataclass(frozen=True)
class Isotope:
    name: str
    mass_amu: float
    gamma_energy_kev: float
    excited_lifetime_s: float | None = None

    def __post_init__(self) -> None:
        if not self.name:
            raise DataError("isotope name must be non-empty")
        if not self.mass_amu > 0:
            raise DataError(f"{self.name}: mass_amu must be > 0, got {self.mass_amu}")
        if not self.gamma_energy_kev > 0:
            raise DataError(
                f"{self.name}: gamma_energy_kev must be > 0, got {self.gamma_energy_kev}"
            )
        if self.excited_lifetime_s is not None and not self.excited_lifetime_s > 0:
            raise DataError(
                f"{self.name}: excited_lifetime_s must be > 0, got {self.excited_lifetime_s}"
            )

    @property
    def mass_kg(self) -> float:
        return mass_amu_to_kg(self.mass_amu)

    @property
    def omega0(self) -> float:
        return energy_kev_to_omega(self.gamma_energy_kev)


@dataclass(frozen=True)
class Medium:
    """Acoustic properties of the host material.

    ``lattice_spacing`` is only needed for the one-dimensional relaxation
    formulas, which take a linear mass density ``mass_density * a**2``.
    """

    mass_density: float
    sound_speed: float
    lattice_spacing: float | None = None
    name: str = ""

    def __post_init__(self) -> None:
        if not self.mass_density > 0:
            raise DomainError(f"mass_density must be > 0, got {self.mass_density}")
        if not self.sound_speed > 0:
            raise DomainError(f"sound_speed must be > 0, got {self.sound_speed}")
        if self.lattice_spacing is not None and not self.lattice_spacing > 0:
            raise DomainError(f"lattice_spacing must be > 0, got {self.lattice_spacing}")

    @property
    def linear_density(self) -> float:
        """Mass per unit length (kg/m) of one lattice column."""
        if self.lattice_spacing is None:
            raise DomainError("linear density needs a lattice spacing")
        return self.mass_density * self.lattice_spacing**2


def energy_kev_to_omega(energy: float) -> float:
    """Angular frequency (rad/s) of a photon with energy given in keV."""
    if not energy >= 0:
        raise DomainError(f"energy must be >= 0 keV, got {energy}")
    return energy * 1000.0 * EV / HBAR


def omega_to_energy_kev(omega: float) -> float:
    if not omega >= 0:
        raise DomainError(f"omega must be >= 0, got {omega}")
    return omega * HBAR / EV / 1000.0


def joule_to_ev(energy: float) -> float:
    return energy / EV


def mass_amu_to_kg(mass: float) -> float:
    if not mass > 0:
        raise DomainError(f"mass must be > 0 amu, got {mass}")
    return mass * AMU


_T = TypeVar("_T")


def _optional_float(token: str) -> float | None:
    return None if token == "-" else float(token)


def _parse_table(
    source: BinaryIO | bytes | Iterable[bytes],
    n_required: int,
    build: Callable[[str, list[float | None]], _T],
    key: Callable[[_T], str],
) -> list[_T]:
    if isinstance(source, (bytes, bytearray)):
        source = source.splitlines()
    records: list[_T] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(source, start=1):
        try:
            text = raw.decode("utf-8") if isinstance(raw, (bytes, bytearray)) else str(raw)
        except UnicodeDecodeError as exc:
            raise ParseError(f"invalid UTF-8 ({exc.reason})", lineno) from None
        text = text.split("#", 1)[0].strip()
        if not text:
            continue
        fields = text.split()
        if not n_required <= len(fields) <= n_required + 1:
            raise ParseError(
                f"expected {n_required} or {n_required + 1} fields, got {len(fields)}", lineno
            )
        try:
            values = [float(tok) for tok in fields[1:n_required]]
            if len(fields) > n_required:
                values.append(_optional_float(fields[n_required]))
            else:
                values.append(None)
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        if not all(v is None or math.isfinite(v) for v in values):
            raise ParseError("non-finite number", lineno)
        try:
            record = build(fields[0], values)
        except (DataError, DomainError) as exc:
            raise DataError(f"line {lineno}: {exc}") from None
        if key(record) in seen:
            raise DataError(f"line {lineno}: duplicate name {key(record)!r}")
        seen.add(key(record))
        records.append(record)
    return records


def load_isotope_table(source: BinaryIO | bytes | Iterable[bytes]) -> list[Isotope]:
    """Parse an isotope table from a binary stream (or raw bytes).

    Raises ParseError (with line number) on malformed lines and DataError on
    invalid values or duplicate names.
    """
    return _parse_table(
        source,
        3,
        lambda name, v: Isotope(name, v[0], v[1], v[2]),
        lambda iso: iso.name,
    )


def load_material_table(source: BinaryIO | bytes | Iterable[bytes]) -> list[Medium]:
    def build(name: str, v: list[float | None]) -> Medium:
        try:
            return Medium(v[0], v[1], v[2], name=name)
        except DomainError as exc:
            raise DataError(f"{name}: {exc}") from None

    return _parse_table(source, 3, build, lambda med: med.name)
