#!/usr/bin/env python3
"""Produce the figure datasets as CSV and render them to images.

The library writes two datasets:
  fig1 - every pair a, b <= N: (a, b, sum, c, r_num, r_den, r_dec)
  fig2 - the diagonal n <= n_max: (n, c, r_num, r_den, r_dec)

The plotting frontend (frontend/render_fig.py) is a separate component that
consumes only these CSVs; it is invoked here as a subprocess, exactly as a
user would run it.
"""

import subprocess
import sys
from pathlib import Path

from phifact import FIG2_HEADER, PAIRS_HEADER, figure1_rows, figure2_rows, write_csv

print(__doc__)

out_dir = Path(__file__).resolve().parent / "output"
out_dir.mkdir(exist_ok=True)

fig1_csv = out_dir / "pairs_n100.csv"
rows1 = figure1_rows(100)
write_csv(str(fig1_csv), PAIRS_HEADER, rows1)
print(f"wrote {len(rows1)} pair rows to {fig1_csv}")

fig2_csv = out_dir / "diagonal_500.csv"
rows2 = figure2_rows(500)
write_csv(str(fig2_csv), FIG2_HEADER, rows2)
print(f"wrote {len(rows2)} diagonal rows to {fig2_csv}")

exceed = [n for n, c, *_ in rows2 if c > 2 * n]
print(f"on the diagonal, c(n, n) > 2n for {len(exceed)} of {len(rows2)} values of n;")
print(f"the first few exceedances: {exceed[:8]}")

render_script = Path(__file__).resolve().parents[1] / "frontend" / "render_fig.py"
try:
    import matplotlib  # noqa: F401  (only to decide whether rendering can run)
except ImportError:
    print("matplotlib is not installed; skipping image rendering")
    sys.exit(0)

for kind, csv_path in (("fig1", fig1_csv), ("fig2", fig2_csv)):
    image = out_dir / f"{kind}.png"
    proc = subprocess.run(
        [
            sys.executable,
            str(render_script),
            "--kind",
            kind,
            "--in",
            str(csv_path),
            "--out",
            str(image),
            "--dpi",
            "150",
        ],
        capture_output=True,
        text=True,
    )
    if proc.returncode == 0:
        print(f"rendered {image}  ({proc.stderr.strip()})")
    else:
        print(f"rendering {kind} failed: {proc.stderr.strip()}")
        sys.exit(proc.returncode)
