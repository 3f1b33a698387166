"""
Machine-checking the quotient polynomials
==========================================

Each ``check_*`` call builds a family member, reads its quotient matrix off
the graph, and compares the characteristic polynomial coefficient by
coefficient with the closed form.  Numeric orderings come with margins.
"""
import json

from bowtie_spectra.verify import check_case2_identities, check_lemma_gmt, check_lemma_k4m

# book with t extra pendants at a spine vertex: quartic f and h = f - x*g
rep = check_lemma_gmt(9, 2)
print("G(9,2):", rep.verdict, "| f =", rep.witness["f"], "| h =", rep.witness["h"])
print("  gap to the book:", rep.witness["gap"])

# K4 with pendants: the cubic, its value at the book radius, and its slope there
for m in (9, 11, 259):
    w = check_lemma_k4m(m).witness
    print(f"K4^{m}: f(rho1) = {w['f_rho1']:.6f} (expected {w['expected_f_rho1']:.6f}), margin {w['margin']:.4f}")

# the seven-block family at large size, with all orderings
rep = check_case2_identities(259, 2)
print("case 2 at m=259, t=2:", rep.verdict)
for k, v in rep.witness["margins"].items():
    print(f"  {k:18s} margin {v:.6f}")

# g at sqrt(m)/2, three ways, side by side
print(json.dumps(rep.to_json()["witness"]["g_at_half_sqrt_m"], indent=2, sort_keys=True))
