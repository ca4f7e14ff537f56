"""Exit criteria. Each test prints one PASS/FAIL line; run with ``pytest -s`` or
``python tests/test_acceptance.py`` to see the summary."""

import json
import math
import random
import time

import pytest

from recoil_lines import (
    Isotope,
    Medium,
    SpectrumConfig,
    central_to_sideband_ratio,
    conservation_bisect,
    debye_waller_from_phonons,
    debye_waller_from_well_oscillation,
    line_spectrum,
    relaxation_report,
    solve_recoil,
    solve_recoil_params,
    spectrum_weight_check,
    trap_frequency_approx,
    trap_frequency_exact,
    validity_ratio,
)
from recoil_lines.cli import NOTE_ENERGY_BALANCE, main
from recoil_lines.spectrum import truncation_deficit

FE = Isotope("57Fe", 56.9354, 14.4)
SN = Isotope("119Sn", 118.9033, 23.8)


def report(criterion, ok, detail):
    print(f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")
    assert ok, f"{criterion}: {detail}"


def regime_grid(n_omega=40, n_mass=25):
    """Log grid of (omega0, mass) spanning validity ratios ~6e-12 .. 6e-4."""
    omegas = [10 ** (16 + 5 * i / (n_omega - 1)) for i in range(n_omega)]
    masses = [10 ** (-27 + 3 * j / (n_mass - 1)) for j in range(n_mass)]
    return [(w, m) for w in omegas for m in masses]


def _cli_json(capsys, *argv):
    assert main([*argv, "--format", "json"]) == 0
    return json.loads(capsys.readouterr().out)


def test_c1_lamb_dicke_closure():
    rng = random.Random(20261019)
    worst = 0.0
    for _ in range(100):
        while True:
            w, m = 10 ** rng.uniform(12, 21), 10 ** rng.uniform(-30, -22)
            if validity_ratio(w, m) < 0.1:
                break
        worst = max(worst, abs(solve_recoil_params(w, m).lamb_dicke - 2.0))
    report("C1 Lamb-Dicke closure", worst <= 1e-9, f"max |kb - 2| = {worst:.2e} over 100 pairs (tol 1e-9)")


def test_c2_excursions(capsys):
    fe = _cli_json(capsys, "recoil", "--energy-kev", "14.4", "--mass-amu", "56.9354")
    sn = _cli_json(capsys, "recoil", "--energy-kev", "23.8", "--mass-amu", "118.9033")
    fe_x, sn_x = fe["results"]["excursion_cm"] / 1e-8, sn["results"]["excursion_cm"] / 1e-8
    ok = 0.54 <= fe_x <= 0.56 and 0.32 <= sn_x <= 0.34
    report(
        "C2 excursions",
        ok,
        f"57Fe {fe_x:.4f}e-8 cm in [0.54, 0.56]; 119Sn {sn_x:.4f}e-8 cm in [0.32, 0.34]",
    )


def test_c3_central_line_dominance():
    ratio = central_to_sideband_ratio(2.0)
    report("C3 central/sideband ratio", 6.5 <= ratio <= 6.8, f"J1^2/J0^2 at kb=2 = {ratio:.4f} in [6.5, 6.8] (~7x)")


def test_c4_relaxation_fe():
    tau = relaxation_report(solve_recoil(FE), Medium(7874.0, 5000.0)).tau_3d
    report("C4a tau_3D 57Fe", 0.03 <= tau <= 0.3, f"{tau:.4g} s in [0.03, 0.3] s")


def test_c4_relaxation_sn():
    tau = relaxation_report(solve_recoil(SN), Medium(7310.0, 2500.0)).tau_3d
    report("C4b tau_3D 119Sn", 0.003 <= tau <= 0.03, f"{tau:.4g} s in [0.003, 0.03] s")


def test_c5_oracle_equivalence():
    start = time.perf_counter()
    devs = {kb: spectrum_weight_check(kb, 10) for kb in (0.1, 0.5, 1.0, 2.0, 5.0)}
    grid = regime_grid()
    assert len(grid) == 1000
    worst = max(
        abs(conservation_bisect(w, m) - trap_frequency_exact(w, m)) / trap_frequency_exact(w, m)
        for w, m in grid
    )
    elapsed = time.perf_counter() - start
    ok = max(devs.values()) <= 1e-9 and worst <= 1e-12 and elapsed < 10
    report(
        "C5 oracle equivalence",
        ok,
        f"max weight deviation {max(devs.values()):.2e} (tol 1e-9); "
        f"bisect vs exact {worst:.2e} (tol 1e-12) over 1000 pairs; {elapsed:.2f} s (< 10 s)",
    )


def test_c6_normalization_and_scaling():
    start = time.perf_counter()
    rng = random.Random(6)
    omega0, trap = FE.omega0, solve_recoil(FE).trap_omega
    failures = []
    for _ in range(200):
        kb = rng.uniform(0, 10)
        eps = 10 ** rng.uniform(-13, -2)
        n = rng.randrange(0, 8)
        w = rng.uniform(0, 3)
        em = line_spectrum(omega0, trap, SpectrumConfig(kb=kb, epsilon=eps, photon_occupation=n), "emission")
        if not 0 <= em.normalization_deficit <= eps or truncation_deficit(kb, em.truncation_order) > eps:
            failures.append(f"deficit kb={kb}")
        ab = line_spectrum(omega0, trap, SpectrumConfig(kb=kb, epsilon=eps, photon_occupation=n + 1), "absorption")
        em_w = {l.offset: l.weight for l in em.lines}
        if any(ab.line_at_offset(-k).weight != v for k, v in em_w.items()):
            failures.append(f"mirror kb={kb}")
        e0 = line_spectrum(omega0, trap, SpectrumConfig(kb=kb, epsilon=eps), "emission")
        an = line_spectrum(omega0, trap, SpectrumConfig(kb=kb, epsilon=eps, photon_occupation=n), "absorption")
        if any(a.weight != (n + 1) * b.weight for a, b in zip(em.lines, e0.lines)):
            failures.append(f"(n+1) kb={kb}")
        if any(a.weight != n * b.weight for a, b in zip(an.lines, e0.lines)):
            failures.append(f"n kb={kb}")
        damped = line_spectrum(omega0, trap, SpectrumConfig(kb=kb, epsilon=eps, suppression_w=w), "emission")
        if abs(damped.total_weight - math.exp(-w) * e0.total_weight) > 1e-14 * e0.total_weight:
            failures.append(f"exp(-W) kb={kb}")
        r = rng.uniform(0, 0.9)
        s1 = debye_waller_from_well_oscillation(math.sqrt(r), None, 1.0, 1.0)
        s2 = debye_waller_from_phonons([(math.sqrt(r), 1.0)], 1.0, 1.0)
        if not (math.isclose(s1.factor, (1 - r) ** 2, rel_tol=1e-12) and math.isclose(s2.factor, 1 - r, rel_tol=1e-12)):
            failures.append(f"W inversion r={r}")
    elapsed = time.perf_counter() - start
    report(
        "C6 normalization/scaling",
        not failures and elapsed < 5,
        f"{len(failures)} failures over 200 random configs; {elapsed:.2f} s (< 5 s)"
        + (f"; first: {failures[0]}" if failures else ""),
    )


def test_c7_approximation_bound():
    worst = 0.0
    for w, m in regime_grid():
        r = validity_ratio(w, m)
        exact = trap_frequency_exact(w, m)
        worst = max(worst, abs(exact - trap_frequency_approx(w, m)) / exact / (4 * r))
    report("C7 approximation bound", worst <= 1.0, f"max relative error / (4 * validity ratio) = {worst:.4f} (<= 1)")


def test_c8_energy_balance_surfaced(capsys):
    data = _cli_json(capsys, "relaxation", "--name", "57Fe", "--density", "7874", "--sound-speed", "5000")
    ratio = data["results"]["energy_balance_ratio"]
    lib_ratio = relaxation_report(solve_recoil(FE), Medium(7874.0, 5000.0)).energy_balance_ratio
    ok = abs(lib_ratio - 2 * math.pi) <= 1e-9 and NOTE_ENERGY_BALANCE in data["notes"]
    ok = ok and ratio == pytest.approx(2 * math.pi, rel=1e-8)
    report("C8 energy-balance discrepancy", ok, f"ratio {lib_ratio:.12f} vs 2*pi (tol 1e-9); note present")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
