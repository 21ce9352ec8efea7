"""
Exhaustive search and the equivalence check
===========================================

The oracle recovers x from T = 2*y^n - d^(2m+1) instead of scanning it, so a
search up to y = 10^4 takes well under a second per exponent.
"""

import tempfile
from pathlib import Path

from lrnsolve import SearchBounds, brute_search, equivalence_report

bounds = SearchBounds(y_max=20, n_max=14, m_max=2, x_max=10**4)
print(sorted(brute_search(7, 11, bounds).tuples()))

###############################################################################
# Without filters the oracle also reports non-primitive solutions.
b = SearchBounds(y_max=200, n_max=3, m_max=3)
print("all:      ", sorted(brute_search(1, 5, b).tuples()))
print("primitive:", sorted(brute_search(1, 5, b, coprime=True).tuples()))

###############################################################################
# Long runs can be split over workers and resumed from a checkpoint log.
with tempfile.TemporaryDirectory() as tmp:
    log = Path(tmp) / "search.jsonl"
    big = SearchBounds(y_max=5000, n_max=9, m_max=1)
    first = brute_search(1, 73, big, workers=2, checkpoint=log)
    resumed = brute_search(1, 73, big, checkpoint=log)
    print(len(log.read_text().splitlines()), "chunks logged; resumed run equal:", first == resumed)

###############################################################################
# The solver and the oracle agree on primitive solutions.
for inst in [(7, 11, 7), (1, 73, 3), (5, 13, 11), (1, 2, 5)]:
    diff = equivalence_report(*inst)
    print(inst, diff.mode, "empty" if diff.empty else diff)
