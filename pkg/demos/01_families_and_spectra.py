"""
Book graphs, their relatives, and their spectral radii
=======================================================

Build a few named graphs, measure the largest adjacency eigenvalue two
ways (power iteration and the exact characteristic polynomial), and look
at how an equitable partition squeezes the whole computation into a tiny
quotient matrix.
"""
from bowtie_spectra import families as fam
from bowtie_spectra.equitable import divisibility_witness, quotient_matrix
from bowtie_spectra.graph import to_graph6
from bowtie_spectra.spectral import adjacency_char_poly, book_rho_closed_form, largest_real_root, spectral_radius

# the 9-edge book: an edge (the spine) joined to four independent pages
book, blocks = fam.make_book(9)
print("book graph6:", to_graph6(book), "blocks:", blocks.to_json())

# power iteration on A + I; the shift keeps bipartite graphs from oscillating
res = spectral_radius(book)
print(f"rho by iteration   {res.rho:.12f}  ({res.iterations} steps, residual {res.residual:.1e})")
print(f"rho closed form    {book_rho_closed_form(9):.12f}")

# the exact route: det(xI - A) with integer arithmetic, then Sturm bisection
p = adjacency_char_poly(book)
print("char poly:", p)
print(f"rho from char poly {largest_real_root(p):.12f}")

# spine and pages form an equitable partition; its 2x2 quotient carries rho
q = quotient_matrix(book, blocks.partition())
qpoly, cofactor, remainder = divisibility_witness(book, blocks.partition())
print("quotient:", q, "->", qpoly, "| cofactor:", cofactor, "| remainder:", remainder)

# relatives with the same edge count sit strictly below the book
for name, (g, _) in [("G(9,2)", fam.make_gmt(9, 2)), ("G(9,4)", fam.make_gmt(9, 4)), ("K4^9", fam.make_k4m(9))]:
    print(f"{name:7s} n={g.n:2d} m={g.m}  rho={spectral_radius(g).rho:.6f}")

# the star with the same size is far behind
print(f"star    n=10 m=9  rho={spectral_radius(fam.make_star(9)).rho:.6f}")
