"""Every identity suite at a small range, with timings.

Run: python3 demos/exhaustive_checks.py [n_max]
"""

import sys

from extspringer import verify

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 6
for report in verify.run_all(n_max):
    print(report.line())
    if not report.passed:
        print("  counterexample:", report.counterexample)
