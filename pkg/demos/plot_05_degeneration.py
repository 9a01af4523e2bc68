"""
The t2 = -t1 degeneration
=========================

On the hyperplane t1 + t2 = 0 each J collapses onto a single colored
Schur function.
"""

from genjack import multipartitions
from genjack.oracle import verify_degeneration

for mp in multipartitions(3, 2):
    report, readings = verify_degeneration(mp)
    print(mp, report.status, sorted(readings))
