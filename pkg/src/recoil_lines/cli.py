"""``recoil-lines`` command-line front end.

Exit codes: 0 success, 2 bad input or usage, 3 physics domain/regime error,
4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from importlib import resources
from typing import Any, Sequence

from . import __version__
from .errors import AccuracyError, InputError, PhysicsError
from .kinematics import solve_recoil, trap_frequency_exact
from .oracle import QuadratureSettings, conservation_bisect, spectrum_weight_check
from .quantities import (
    Isotope,
    Medium,
    joule_to_ev,
    load_isotope_table,
    load_material_table,
)
from .relaxation import DEFAULT_MARGIN, relaxation_report
from .spectrum import (
    DEFAULT_EPSILON,
    Branch,
    SpectrumConfig,
    debye_waller_from_phonons,
    debye_waller_from_well_oscillation,
    line_spectrum,
)

SCHEMA_VERSION = "1"
TABLE_ENV = "RECOIL_LINES_TABLE"

EXIT_OK, EXIT_INPUT, EXIT_PHYSICS, EXIT_VERIFY = 0, 2, 3, 4

WEIGHT_TOLERANCE = 1e-9
OMEGA_TOLERANCE = 1e-12

NOTE_AMPLITUDE = (
    "amplitude convention: b = V/Omega = 2c/omega0, so kb = 2 and the reported "
    "excursion is 2b = 4c/omega0; a coefficient c/omega0 would give kb = 1 and "
    "half the excursion"
)
NOTE_ENERGY_BALANCE = (
    "energy balance: hbar*Omega divided by the 1D sound intensity gives "
    "16*rho*lambda_s/(m*Omega) while the 1D relaxation time is "
    "8*rho*lambda_s/(pi*m*Omega); both are evaluated as written and differ by 2*pi"
)
NOTES = [NOTE_AMPLITUDE, NOTE_ENERGY_BALANCE]


class CliInputError(InputError):
    pass


def fmt(value: Any) -> Any:
    """Round floats to 9 significant digits; everything else passes through."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            return str(value)
        return float(f"{value:.8e}")
    return value


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.8e}"
    return str(value)


def _write_csv(rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow([_csv_cell(v) for v in row])
    return buf.getvalue()


def _record(command: str, inputs: dict, results: Any) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": {k: fmt(v) for k, v in inputs.items()},
        "results": results,
        "notes": list(NOTES),
    }


def _emit_json(record: dict) -> str:
    def clean(obj: Any) -> Any:
        if isinstance(obj, dict):
            return {k: clean(v) for k, v in obj.items()}
        if isinstance(obj, list):
            return [clean(v) for v in obj]
        return fmt(obj)

    return json.dumps(clean(record), indent=2) + "\n"


def _emit_flat(record: dict, fmt_name: str) -> str:
    if fmt_name == "json":
        return _emit_json(record)
    results = record["results"]
    header = list(results) + ["notes"]
    row = list(results.values()) + [" | ".join(record["notes"])]
    return _write_csv([header, row])


# --- input resolution ------------------------------------------------------


def _read_table(path: str | None):
    if path is None:
        path = os.environ.get(TABLE_ENV) or None
    try:
        if path is None:
            data = resources.files("recoil_lines").joinpath("data/isotopes.txt").read_bytes()
            return load_isotope_table(data), "<bundled>"
        with open(path, "rb") as fh:
            return load_isotope_table(fh), path
    except OSError as exc:
        raise CliInputError(f"cannot read isotope table {path!r}: {exc.strerror}") from None


def _find_isotope(isotopes: list[Isotope], name: str) -> Isotope:
    for iso in isotopes:
        if iso.name == name:
            return iso
    known = ", ".join(i.name for i in isotopes) or "none"
    raise CliInputError(f"unknown isotope {name!r} (known: {known})")


def _resolve_isotope(args: argparse.Namespace) -> Isotope:
    if args.energy_kev is not None or args.mass_amu is not None:
        if args.energy_kev is None or args.mass_amu is None:
            raise CliInputError("--energy-kev and --mass-amu must be given together")
        if args.name:
            raise CliInputError("give either --name or --energy-kev/--mass-amu, not both")
        try:
            return Isotope("custom", args.mass_amu, args.energy_kev, args.lifetime)
        except InputError as exc:
            raise CliInputError(str(exc)) from None
    if not args.name:
        raise CliInputError("need --name or --energy-kev with --mass-amu")
    isotopes, _ = _read_table(args.table)
    iso = _find_isotope(isotopes, args.name)
    if args.lifetime is not None:
        iso = Isotope(iso.name, iso.mass_amu, iso.gamma_energy_kev, args.lifetime)
    return iso


def _isotope_inputs(iso: Isotope) -> dict:
    return {
        "name": iso.name,
        "mass_amu": iso.mass_amu,
        "gamma_energy_kev": iso.gamma_energy_kev,
        "excited_lifetime_s": iso.excited_lifetime_s,
    }


def _resolve_medium(args: argparse.Namespace) -> Medium:
    density, speed, spacing = args.density, args.sound_speed, args.lattice_spacing
    name = ""
    if args.material:
        if not args.materials:
            raise CliInputError("--material needs --materials FILE")
        try:
            with open(args.materials, "rb") as fh:
                media = load_material_table(fh)
        except OSError as exc:
            raise CliInputError(f"cannot read materials file: {exc.strerror}") from None
        match = [m for m in media if m.name == args.material]
        if not match:
            raise CliInputError(f"unknown material {args.material!r}")
        med = match[0]
        name = med.name
        density = density if density is not None else med.mass_density
        speed = speed if speed is not None else med.sound_speed
        spacing = spacing if spacing is not None else med.lattice_spacing
    missing = [flag for flag, v in (("--density", density), ("--sound-speed", speed)) if v is None]
    if missing:
        raise CliInputError("missing material parameter(s): " + ", ".join(missing))
    if args.dim == 1 and spacing is None:
        raise CliInputError("--dim 1 needs --lattice-spacing")
    try:
        return Medium(density, speed, spacing, name=name)
    except PhysicsError as exc:
        raise CliInputError(str(exc)) from None


# --- commands ----------------------------------------------------------------


def cmd_isotopes(args: argparse.Namespace) -> str:
    isotopes, source = _read_table(args.table)
    if args.name:
        isotopes = [_find_isotope(isotopes, args.name)]
    rows = [_isotope_inputs(i) for i in isotopes]
    if args.format == "json":
        return _emit_json(_record("isotopes", {"table": source, "name": args.name}, rows))
    header = ["name", "mass_amu", "gamma_energy_kev", "excited_lifetime_s"]
    return _write_csv([header] + [[r[k] for k in header] for r in rows])


def recoil_results(iso: Isotope) -> dict:
    sol = solve_recoil(iso)
    return {
        "omega0_rad_s": sol.omega0,
        "recoil_energy_ev": joule_to_ev(sol.recoil_energy),
        "trap_omega_rad_s": sol.trap_omega,
        "trap_omega_exact_rad_s": trap_frequency_exact(sol.omega0, sol.mass),
        "recoil_velocity_m_s": sol.recoil_velocity,
        "amplitude_b_m": sol.amplitude_b,
        "lamb_dicke": sol.lamb_dicke,
        "excursion_m": sol.excursion,
        "excursion_cm": sol.excursion * 100.0,
        "validity_ratio": sol.validity_ratio,
    }


def cmd_recoil(args: argparse.Namespace) -> str:
    iso = _resolve_isotope(args)
    return _emit_flat(_record("recoil", _isotope_inputs(iso), recoil_results(iso)), args.format)


def _parse_mode(text: str) -> tuple[float, float]:
    try:
        ratio, omega = (float(t) for t in text.split(","))
    except ValueError:
        raise CliInputError(f"--phonon-mode expects RATIO,OMEGA, got {text!r}") from None
    return ratio, omega


def cmd_spectrum(args: argparse.Namespace) -> str:
    iso = _resolve_isotope(args)
    sol = solve_recoil(iso)
    kb = sol.lamb_dicke if args.kb is None else args.kb
    b = sol.amplitude_b

    w_total = args.w
    conditions: dict[str, Any] = {}
    if args.bs_ratio is not None:
        well = debye_waller_from_well_oscillation(
            args.bs_ratio * b, args.omega_s, b, sol.trap_omega
        )
        w_total += well.w
        conditions.update({f"well_{k}": v for k, v in well.conditions.items()})
    if args.phonon_mode:
        modes = [(r * b, om) for r, om in map(_parse_mode, args.phonon_mode)]
        ph = debye_waller_from_phonons(modes, b, sol.trap_omega)
        w_total += ph.w
        conditions.update({f"phonons_{k}": v for k, v in ph.conditions.items()})

    config = SpectrumConfig(
        kb=kb,
        max_order=args.max_order,
        photon_occupation=args.n,
        suppression_w=w_total,
        epsilon=args.epsilon,
    )
    spec = line_spectrum(sol.omega0, sol.trap_omega, config, args.branch)
    inputs = _isotope_inputs(iso) | {
        "branch": args.branch,
        "n": args.n,
        "kb": kb,
        "max_order": args.max_order,
        "epsilon": args.epsilon,
        "w": args.w,
        "bs_ratio": args.bs_ratio,
        "omega_s": args.omega_s,
        "phonon_modes": ";".join(args.phonon_mode or []) or None,
    }
    lines = [
        {
            "order": ln.order,
            "frequency_rad_s": ln.frequency,
            "offset_in_Omega": ln.offset,
            "weight": ln.weight,
            "branch": ln.branch.value,
        }
        for ln in spec.lines
    ]
    summary = {
        "normalization_deficit": spec.normalization_deficit,
        "truncation_order": spec.truncation_order,
        "suppression_factor": spec.suppression_factor,
        "suppression_w": w_total,
        "trap_omega_rad_s": sol.trap_omega,
        "omega0_rad_s": sol.omega0,
        "conditions": conditions,
    }
    if args.format == "json":
        return _emit_json(_record("spectrum", inputs, {"lines": lines, "summary": summary}))
    header = ["order", "frequency_rad_s", "offset_in_Omega", "weight", "branch"]
    rows: list[list[Any]] = [header] + [[ln[k] for k in header] for ln in lines]
    rows.append(
        [
            "summary",
            f"normalization_deficit={_csv_cell(spec.normalization_deficit)}",
            f"truncation_order={spec.truncation_order}",
            f"suppression_factor={_csv_cell(spec.suppression_factor)}",
            f"branch={args.branch}",
        ]
    )
    return _write_csv(rows)


def cmd_relaxation(args: argparse.Namespace) -> str:
    iso = _resolve_isotope(args)
    medium = _resolve_medium(args)
    sol = solve_recoil(iso)
    rep = relaxation_report(sol, medium, args.dim, args.margin, iso.excited_lifetime_s)
    inputs = _isotope_inputs(iso) | {
        "density_kg_m3": medium.mass_density,
        "sound_speed_m_s": medium.sound_speed,
        "lattice_spacing_m": medium.lattice_spacing,
        "material": medium.name or None,
        "dim": args.dim,
        "margin": args.margin,
    }
    results = {
        "sound_wavelength_m": rep.sound_wavelength,
        "velocity_ratio": rep.phonons.velocity_ratio,
        "momentum_ratio": rep.phonons.momentum_ratio,
        "ks_b": rep.phonons.ks_b,
        "sound_field_amplitude": rep.sound_field_amplitude,
        "tau_s": rep.tau,
        "tau_3d_s": rep.tau_3d,
        "tau_1d_s": rep.tau_1d,
        "mass_ratio_1d": rep.mass_ratio_1d,
        "emission_rate_ratio_per_s": rep.emission_rate_ratio,
        "period_s": rep.period,
        "hierarchy_ok_period": rep.hierarchy_ok_period,
        "hierarchy_ok_lifetime": rep.hierarchy_ok_lifetime,
        "energy_balance_ratio": rep.energy_balance_ratio,
    }
    record = _record("relaxation", inputs, results)
    record["notes"].append(
        f"energy balance ratio (hbar*Omega/I over tau_1d) = {rep.energy_balance_ratio:.9g}"
    )
    return _emit_flat(record, args.format)


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    settings = QuadratureSettings(max_panels=args.panels)
    inputs = {
        "kb": args.kb,
        "orders": args.orders,
        "panels": args.panels,
        "energy_kev": args.energy_kev,
        "mass_amu": args.mass_amu,
    }
    iso = Isotope("verify", args.mass_amu, args.energy_kev)
    try:
        deviation = spectrum_weight_check(args.kb, args.orders, settings)
        error = None
    except AccuracyError as exc:
        deviation, error = None, str(exc)
    exact = trap_frequency_exact(iso.omega0, iso.mass_kg)
    bisect = conservation_bisect(iso.omega0, iso.mass_kg)
    omega_rel = abs(exact - bisect) / exact
    weights_ok = deviation is not None and deviation <= WEIGHT_TOLERANCE
    omega_ok = omega_rel <= OMEGA_TOLERANCE
    passed = weights_ok and omega_ok
    results = {
        "max_weight_deviation": deviation,
        "weight_tolerance": WEIGHT_TOLERANCE,
        "weights_ok": weights_ok,
        "trap_omega_exact_rad_s": exact,
        "trap_omega_bisect_rad_s": bisect,
        "omega_relative_difference": omega_rel,
        "omega_tolerance": OMEGA_TOLERANCE,
        "omega_ok": omega_ok,
        "passed": passed,
        "error": error,
    }
    out = _emit_flat(_record("verify", inputs, results), args.format)
    if error:
        print(f"recoil-lines: accuracy error: {error}", file=sys.stderr)
    return out, EXIT_OK if passed else EXIT_VERIFY


# --- parser ---------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors -> exit 2, same as argparse
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "json"), default="csv")


def _add_emitter(p: argparse.ArgumentParser) -> None:
    p.add_argument("--name", help="isotope name in the table")
    p.add_argument("--table", help=f"isotope table (default: ${TABLE_ENV} or bundled)")
    p.add_argument("--energy-kev", type=float)
    p.add_argument("--mass-amu", type=float)
    p.add_argument("--lifetime", type=float, help="excited-state lifetime in s")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="recoil-lines",
        description="Recoil sideband spectra and relaxation times of a trapped gamma emitter.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("isotopes", help="list the isotope table")
    p.add_argument("--table")
    p.add_argument("--name")
    _add_common(p)
    p.set_defaults(func=cmd_isotopes)

    p = sub.add_parser("recoil", help="recoil kinematics")
    _add_emitter(p)
    _add_common(p)
    p.set_defaults(func=cmd_recoil)

    p = sub.add_parser("spectrum", help="sideband line table")
    _add_emitter(p)
    p.add_argument("--branch", choices=[b.value for b in Branch], default="emission")
    p.add_argument("--n", type=int, default=0, help="photon occupation number")
    p.add_argument("--kb", type=float, help="override the Lamb-Dicke parameter")
    p.add_argument("--max-order", type=int)
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    p.add_argument("--w", type=float, default=0.0, help="explicit suppression exponent W")
    p.add_argument("--bs-ratio", type=float, help="well oscillation amplitude b_s/b")
    p.add_argument("--omega-s", type=float, help="well oscillation frequency (rad/s)")
    p.add_argument(
        "--phonon-mode",
        action="append",
        metavar="RATIO,OMEGA",
        help="phonon mode amplitude b_i/b and frequency (rad/s); repeatable",
    )
    _add_common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("relaxation", help="phonon relaxation of the trap motion")
    _add_emitter(p)
    p.add_argument("--density", type=float, help="mass density (kg/m^3)")
    p.add_argument("--sound-speed", type=float, help="sound speed (m/s)")
    p.add_argument("--lattice-spacing", type=float, help="lattice spacing (m)")
    p.add_argument("--materials", help="materials table file")
    p.add_argument("--material", help="material name in the materials table")
    p.add_argument("--dim", type=int, choices=(1, 3), default=3)
    p.add_argument("--margin", type=float, default=DEFAULT_MARGIN, help="factor for '>>'")
    _add_common(p)
    p.set_defaults(func=cmd_relaxation)

    p = sub.add_parser("verify", help="cross-check analytic results against oracles")
    p.add_argument("--kb", type=float, default=2.0)
    p.add_argument("--orders", type=int, default=8)
    p.add_argument("--panels", type=int, default=1 << 16, help="quadrature panel budget")
    p.add_argument("--energy-kev", type=float, default=14.4)
    p.add_argument("--mass-amu", type=float, default=56.9354)
    _add_common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except InputError as exc:
        print(f"recoil-lines: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PhysicsError as exc:
        print(f"recoil-lines: {exc}", file=sys.stderr)
        return EXIT_PHYSICS
    except AccuracyError as exc:
        print(f"recoil-lines: accuracy error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    sys.stdout.write(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
