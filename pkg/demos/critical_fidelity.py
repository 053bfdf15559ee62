"""Read the production sweep and show the behaviour at the critical point.

    python demos/critical_fidelity.py [results/sweep_D70.csv]

Prints, for gamma=1 and r=1,2,3, the fit dF/dlambda = a + b ln|lambda-1|
on both sides, the location of the steepest change of the entropy, and the
second derivative of F on the fine grid next to lambda=1.
"""

import sys

import numpy as np

from qpt_teleport import analysis
from qpt_teleport.pipeline import select
from qpt_teleport.records import read_csv

path = sys.argv[1] if len(sys.argv) > 1 else "results/sweep_D70.csv"
recs = read_csv(path)

for r in (1, 2, 3):
    lams, rows = select(recs, r, 1.0)
    f = np.array([row.fidelity for row in rows])
    s = np.array([row.entropy for row in rows])
    x, d1 = analysis.piecewise_difference(lams, f, 1)
    x2, d2 = analysis.piecewise_difference(lams, f, 2)
    print(f"r={r}")
    for side in ("below", "above"):
        fit = analysis.log_fit(x, d1, side)
        print(f"  {side:5s}: dF/dlambda = {fit.intercept:+.4f} {fit.slope:+.4f} ln|lambda-1|"
              f"   R2={fit.r_squared:.4f} ({fit.n_points} points)")
    print(f"  steepest entropy change at lambda = {analysis.entropy_peak(lams, s).lambda_star:.3f}")
    near = np.abs(x2 - 1) <= 0.0101
    print("  F'' near 1: " + " ".join(f"{a:.3f}:{b:.1f}" for a, b in zip(x2[near], d2[near])))
