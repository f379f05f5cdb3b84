#!/usr/bin/env python3
"""Regenerate the preset config files in canonical serialized form."""
import os
import subprocess
import sys

PRESETS = {
    "fig1.cfg": "SBAB2:0.016, SABA2:0.0185, ABA82:0.032",
    "fig2.cfg": "SABA2wc:0.165, ABAH864:0.355, Sz4:0.084, SBAB2Y4:0.13, "
                "ABA82:0.032",
    "fig3.cfg": "SABA2Y4:0.1255, SBAB2wc:0.134, ABAH864:0.355, "
                "ABA864:0.4855, FRo4:0.084",
}

TEMPLATE = """sites = 1000
w = 4
seed = 5
energy = 0.4
t-end = 1e+05
samples = 60
runs = {runs}
"""


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else "presets"
    os.makedirs(outdir, exist_ok=True)
    for name, runs in PRESETS.items():
        with open(os.path.join(outdir, name), "w") as f:
            f.write(TEMPLATE.format(runs=runs))
    print(f"wrote {len(PRESETS)} presets to {outdir}/")


if __name__ == "__main__":
    main()
