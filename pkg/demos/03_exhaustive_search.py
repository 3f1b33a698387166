"""
Exhaustive search at desk scale
================================

Enumerate every connected graph with m edges up to isomorphism, keep the
ones with no bowtie and no H(4,3), and ask which has the largest spectral
radius.  From m = 9 on the book wins outright; at m = 7 it does not.
"""
import sys

from bowtie_spectra.search import enumerate_connected, extremal_search, theorem_report

# counts of connected graphs by edge number
print("connected graphs by size:", [sum(1 for _ in enumerate_connected(m)) for m in range(1, 9)])

for m in (7, 9):
    rep = extremal_search(m)
    print(f"m={m}: {rep.counts['free']} of {rep.counts['connected']} survive, "
          f"winner {rep.argmax}, rho={rep.rho_max:.6f}, bound {rep.bound:.6f}, "
          f"book unique: {rep.book_is_unique_argmax}")

# the induced reading of freeness lets K5 minus an edge through at m = 9
rep = extremal_search(9, induced=True)
print("induced reading, m=9:", rep.argmax, f"rho={rep.rho_max:.6f}")

# structure of the winner around its heaviest vertex
m = int(sys.argv[1]) if len(sys.argv) > 1 else 9
rep = theorem_report(m)
for ann in rep.annotations:
    print(ann["graph6"], ann["neighborhood"]["class"], "e(W) =", ann["decomposition"]["e_W"],
          "| pendant check:", ann["pendant"]["verdict"], "| e(W) bound:", ann["ew_bound"]["verdict"])
