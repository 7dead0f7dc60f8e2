"""A tour of the combinatorial layer.

Build simplicial complexes from facets, take full subcomplexes and
links, test flagness, and measure the distance from flagness with nu.
"""

from flagtor import complexes as C
from flagtor.complexes import verts_of

# The 4-cycle: the smallest flag complex whose moment-angle manifold is
# a nontrivial product of spheres.
square = C.from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
print("4-cycle:", len(square.faces), "faces, dim", square.dim)
print("flag?", C.is_flag(square))
print("missing faces:", [verts_of(f) for f in C.missing_faces(square)])

# Full subcomplexes re-index their vertices but remember the originals.
diag = C.full_subcomplex(square, [1, 3])
print("\nK_{1,3} has faces", sorted(verts_of(f) for f in diag.faces),
      "with original labels", diag.labels)

# Links of vertices in a flag complex are again full subcomplexes.
oct_ = C.cross_polytope(3)  # the octahedron, a flag 2-sphere
lk = C.link(oct_, [1])
print("\nlink of vertex 1 in the octahedron lives on", lk.labels)
print("it is a 4-cycle:", sorted(verts_of(f) for f in lk.faces if f))

# f- and h-vectors, and the reduced Euler characteristic.
fv = C.f_vector(square)
print("\nf =", fv.f, " h =", fv.h, " chi~ =", C.reduced_euler_char(square))

# nu measures how many rounds of filling higher missing faces are needed
# to reach the flagification.  Two independent algorithms must agree.
for name, K in [
    ("boundary of the triangle", C.simplex_boundary(3)),
    ("1-skeleton of the tetrahedron", C.skeleton(C.simplex(4), 1)),
    ("disjoint sphere boundaries", C.disjoint_union(
        C.simplex_boundary(3), C.simplex_boundary(6))),
]:
    print(f"\n{name}: nu_filtration = {C.nu_filtration(K)}, "
          f"nu_direct = {C.nu_direct(K)}")

# Barycentric subdivisions are always flag; this one reappears in the
# other demos as the flag triangulation of the projective plane.
rp2_flag = C.barycentric_subdivision(C.real_projective_plane())
print("\nbarycentric projective plane: m =", rp2_flag.m,
      "faces =", len(rp2_flag.faces), "flag?", C.is_flag(rp2_flag))
