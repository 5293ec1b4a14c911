#!/usr/bin/env python3
"""Write the dense alpha-grid CSVs behind the efficiency/curvature plot and
the complexity / length-scale scatter plots.

Usage: python scripts/make_figure_data.py [output_dir]
"""

import pathlib
import sys

from blochcomplexity.cli import main

outdir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "figdata")
outdir.mkdir(parents=True, exist_ok=True)

status = 0
for which, points in (("fig2", 513), ("fig4", 257), ("fig5", 257)):
    path = outdir / f"{which}.csv"
    status |= main(["figdata", which, "--points", str(points),
                    "--out", str(path)])
    print(f"{which}: {path}")
sys.exit(status)
