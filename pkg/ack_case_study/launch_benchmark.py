"""
Author: the ack_inverse developers
October 2026

--------------------------------------------------------------------------------
Copyright (C) 2026 the ack_inverse developers

This file is part of the ack_inverse program.

This program is free software:
you can redistribute it and/or modify it under the terms
of the GNU General Public License as published by the Free Software Foundation,
either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY;
without even the implied warranty of MERCHANTABILITY
or FITNESS FOR A PARTICULAR PURPOSE.
See the GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program.
If not, see <https://www.gnu.org/licenses/>.

--------------------------------------------------------------------------------
File content:
Launches the scaling experiment: benchmark `alpha` and the inverses
of levels 0 to 3 over the configured input sizes, then store the records,
the hyperparameters and the log-log scaling summary in a timestamped
directory under `bench_runs/`.
"""
import logging
import os
import time
from typing import Any, Dict, List, Sequence

from ack_tools.run_bench import (BenchRecord, fits_linear_scaling, run_bench,
                                 scaling_report, write_records_csv)
from ack_tools.storage import gen_directories, store_log

# 2**12, 2**14, ..., 2**24 bits
SIZES = tuple(2**exponent for exponent in range(12, 25, 2))
NUM_REPETITIONS = 5
SEED = 20211001
BIT_BUDGET = 2**26

SLOPE_RANGE = (0.9, 1.1)
DOUBLING_RATIO_RANGE = (1.5, 3.0)
# Smallest size whose wall time enters the ratio check.
RATIO_MIN_BITS = 2**18


def main():
    logging.basicConfig(level=logging.INFO,
                        format="%(asctime)s %(name)s: %(message)s")
    timestamp = time.strftime(r"%Y-%m-%d_%H-%M-%S", time.localtime())
    save_dir = os.path.join("bench_runs", timestamp)
    report = run_experiment(SIZES, NUM_REPETITIONS, SEED, save_dir)
    verdict = fits_linear_scaling(report["all_sizes"],
                                  slope_range=SLOPE_RANGE,
                                  ratio_range=DOUBLING_RATIO_RANGE,
                                  ratio_summary=report["large_sizes"])
    for op, entry in sorted(report["all_sizes"].items()):
        large = report["large_sizes"][op]
        print(f"{op:>7}: cost slope {entry['cost_slope']:.3f}, "
              f"time slope {entry['time_slope']:.3f}, "
              f"median ratio per doubling "
              f"{entry['median_doubling_ratio']:.2f} "
              f"({large['median_doubling_ratio']:.2f} "
              f"from {RATIO_MIN_BITS} bits on)")
    print("Linear scaling " + ("confirmed" if verdict else "NOT confirmed"))


def run_experiment(sizes: Sequence[int],
                   num_repetitions: int,
                   seed: int,
                   save_dir: str) -> Dict[str, Any]:
    """
    Run the benchmark and save its outputs
    as "records.csv", "hyperparameters.json" and "scaling_summary.json"
    in the directory `save_dir`.
    The summary holds the fits over all sizes and over the sizes
    from `RATIO_MIN_BITS` on.
    Also return the summary.

    @param sizes: ascending input bit lengths.
    @type sizes: Sequence[int]
    @param num_repetitions: amount of repetitions (distinct inputs) per size.
    @type num_repetitions: int
    @param seed: seed of the input generator.
    @type seed: int
    @param save_dir: path to the directory to save the files in.
    @type save_dir: str

    @return Dict[str, Any], the output of `scaling_report()`.
    """
    gen_directories(save_dir)
    records: List[BenchRecord] = run_bench(sizes, num_repetitions, seed,
                                           BIT_BUDGET, verbose=True)
    report = scaling_report(records, RATIO_MIN_BITS)

    hyperparams = {"sizes": list(sizes), "reps": num_repetitions,
                   "seed": seed, "budget": BIT_BUDGET,
                   "ratio_min_bits": RATIO_MIN_BITS}
    write_records_csv(records, os.path.join(save_dir, "records.csv"))
    store_log(hyperparams, os.path.join(save_dir, "hyperparameters.json"))
    store_log(report, os.path.join(save_dir, "scaling_summary.json"))
    return report


if __name__ == "__main__":
    main()
