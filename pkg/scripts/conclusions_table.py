"""Recompute the headline numbers for 57Fe and 119Sn.

    python scripts/conclusions_table.py [--vs-fe 5000] [--vs-sn 2500]

Prints excursion, kb, trap frequency, 3D relaxation time and the ratio of
relaxation time to trap period for each isotope.
"""

import argparse

from recoil_lines import Isotope, Medium, relaxation_report, solve_recoil


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--vs-fe", type=float, default=5000.0)
    ap.add_argument("--vs-sn", type=float, default=2500.0)
    args = ap.parse_args()

    cases = [
        (Isotope("57Fe", 56.9354, 14.4), Medium(7874.0, args.vs_fe, name="iron")),
        (Isotope("119Sn", 118.9033, 23.8), Medium(7310.0, args.vs_sn, name="tin")),
    ]
    print(f"{'isotope':8} {'2b (1e-8 cm)':>13} {'kb':>5} {'Omega (rad/s)':>14} "
          f"{'v_s (m/s)':>10} {'tau_3D (s)':>11} {'tau/period':>11}")
    for iso, med in cases:
        sol = solve_recoil(iso)
        rep = relaxation_report(sol, med)
        print(
            f"{iso.name:8} {sol.excursion * 100 / 1e-8:13.4f} {sol.lamb_dicke:5.2f} "
            f"{sol.trap_omega:14.4e} {med.sound_speed:10.0f} {rep.tau_3d:11.4g} "
            f"{rep.tau_3d / rep.period:11.3e}"
        )


if __name__ == "__main__":
    main()
