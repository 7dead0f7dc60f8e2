"""LS-category of moment-angle complexes.

For flag K the category of Z_K is one more than the largest integral
cohomological dimension of a full subcomplex, which also equals the same
maximum over links; field-by-field Toomer invariants recover it, and for
non-flag K flagification discounted by nu gives a lower bound.
"""

from flagtor import complexes as C
from flagtor import homology as H
from flagtor import lscat as L
from flagtor.complexes import verts_of

for name, K in [
    ("4-cycle", C.cycle_complex(4)),
    ("6-cycle", C.cycle_complex(6)),
    ("octahedron", C.cross_polytope(3)),
    ("icosahedron", C.icosahedron()),
]:
    print(f"{name}: cat(Z_K) = {L.cat_zk(K)}, "
          f"via links {L.cat_via_links(K)}, "
          f"Toomer/Q {L.toomer(K, H.RATIONALS)}")

# Flag triangulations of d-manifolds always give d+1.

# Non-flag lower bound: the 1-skeleton of the octahedron flagifies back
# to the octahedron and loses one filtration step.
sk = C.skeleton(C.cross_polytope(3), 1)
print("\n1-skeleton of the octahedron: nu =", C.nu_direct(sk),
      " lower bound for cat =", L.cat_lower_bound(sk))

# The links-versus-subcomplexes identity holds without flagness.
rp2 = C.real_projective_plane()
print("projective plane (non-flag): 1+max cdim K_J =",
      1 + L.max_subcomplex_cdim(rp2), " via links =", L.cat_via_links(rp2))

# Cup-length witnesses: disjoint vertex sets whose product class survives
# certify that the cup-length attains the category.
for name, K in [("4-cycle", C.cycle_complex(4)),
                ("octahedron", C.cross_polytope(3))]:
    w = L.cup_witness_search(K)
    parts = [verts_of(p) for p in w["parts"]]
    print(f"\n{name}: cup witness with parts {parts} over {w['field']}"
          f" (certifies cup-length {w['dimension'] + 1})")
