#!/usr/bin/env python3
"""Run the seeded verification suite and print the merged report.

The same run is available from the command line:

    orthoseries verify --config default.json --seed 1 --out report.json
"""

from orthoseries import run_suite
from orthoseries.verify import default_config

cfg = default_config(seed=1, n_trials=50)
report = run_suite(cfg)

print(f"seed {report.seed}: all checks passed = {report.all_passed} "
      f"({report.wall_time_s:.1f}s)\n")
for check, res in sorted(report.results.items(), key=lambda kv: kv[0].value):
    print(f"  {check.value:18s} {'pass' if res.passed else 'FAIL':4s} "
          f"cases={res.n_cases:5d} worst ratio={res.worst_ratio:.6f}")

worst = max(report.results.values(), key=lambda r: r.worst_ratio)
print(f"\nclosest call: {worst.check.value}, reproducer {worst.worst_case}")
