"""Scan the Lamb-Dicke parameter and write sideband weights as CSV.

    python scripts/sideband_scan.py --kb-max 6 --steps 61 > scan.csv

Columns: kb, then J_m(kb)^2 for offsets -M..M around the carrier (emission
branch, so offset 0 is the line at omega0), then the central/shifted ratio
where defined.
"""

import argparse
import csv
import sys

from recoil_lines import SingularityError, SpectrumConfig, central_to_sideband_ratio, line_spectrum


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--kb-max", type=float, default=6.0)
    ap.add_argument("--steps", type=int, default=61)
    ap.add_argument("--max-order", type=int, default=6)
    args = ap.parse_args()

    offsets = list(range(-args.max_order - 1, args.max_order))
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["kb"] + [f"w{k:+d}" for k in offsets] + ["central_over_shifted"])
    for i in range(args.steps):
        kb = args.kb_max * i / (args.steps - 1)
        spec = line_spectrum(1.0, 1e-6, SpectrumConfig(kb=kb, max_order=args.max_order))
        weights = {l.offset: l.weight for l in spec.lines}
        try:
            ratio = f"{central_to_sideband_ratio(kb):.6e}"
        except SingularityError:
            ratio = ""
        writer.writerow([f"{kb:.4f}"] + [f"{weights[k]:.6e}" for k in offsets] + [ratio])


if __name__ == "__main__":
    main()
