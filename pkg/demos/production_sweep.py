"""Production sweep behind the acceptance suite.

Solves every point of the piecewise grid (0.02 away from the critical point,
0.002 within 0.12 of it) at D=70, plus lambda=1 at D=50, and writes

    results/sweep_D70.csv   r = 1, 2, 3; Werner gamma = 1, 0.6, 0.2;
                            X-state gamma = 0.6 with epsilon = -0.35, -0.45
    results/sweep_D50.csv   lambda = 1 only, same inputs

Ground states are checkpointed in results/checkpoints, so an interrupted run
resumes where it stopped.  On one core the full run takes a few hours.

    python demos/production_sweep.py [--workers N] [--out-dir results]
"""

import argparse
import json
import logging
import time
from pathlib import Path

from qpt_teleport.pipeline import SweepConfig, production_grid, run_sweep
from qpt_teleport.teleport import InputStateSpec

INPUTS = (
    InputStateSpec("werner", 1.0),
    InputStateSpec("werner", 0.6),
    InputStateSpec("werner", 0.2),
    InputStateSpec("x_state", 0.6, -0.35),
    InputStateSpec("x_state", 0.6, -0.45),
)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", default="results")
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
    out = Path(args.out_dir)
    checkpoints = out / "checkpoints"
    out.mkdir(parents=True, exist_ok=True)
    timing = {}
    for d_max, lambdas in ((50, (1.0,)), (70, production_grid())):
        config = SweepConfig(
            lambdas=lambdas,
            separations=(1, 2, 3),
            inputs=INPUTS,
            d_max=d_max,
            output_path=str(out / f"sweep_D{d_max}.csv"),
            checkpoint_dir=str(checkpoints),
            workers=args.workers,
        )
        start = time.perf_counter()
        records = run_sweep(config)
        timing[f"sweep_D{d_max}_seconds"] = round(time.perf_counter() - start, 1)
        logging.info("wrote %d records to %s", len(records), config.output_path)
    # a resumed run only times the points it still had to solve
    (out / "timing.json").write_text(json.dumps(timing, indent=1) + "\n")


if __name__ == "__main__":
    main()
