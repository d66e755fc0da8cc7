"""
A small benchmark matrix
========================

The same comparison as ``beamplace bench`` at a size that runs in a few
seconds. Every (K, seed) pair defines one scenario shared by all
algorithms.
"""

import tempfile
from pathlib import Path

from beamplace.bench import MatrixSpec, export_cdf, run_matrix

report = run_matrix([20, 50, 100], range(5), ["tgbp", "bkmeans"], MatrixSpec(max_restarts=50))
for entry in report.aggregate():
    print(
        f"{entry['algorithm']:8s} K={entry['K']:4d} beams={entry['mean_nabs']:6.2f} "
        f"gap={entry['mean_load_gap']:5.2f} avg SCGNR={entry['mean_avg_scgnr_db']:6.2f} dB"
    )

out = Path(tempfile.mkdtemp())
report.write(out)
points = export_cdf(report.rows, "avg_scgnr", out / "avg_scgnr_cdf.csv")
print(f"wrote {out}/report.csv, summary.csv and a {len(points)}-point CDF")
