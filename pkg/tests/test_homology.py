"""Reduced (co)homology examples and coefficient bookkeeping."""

import random

from flagtor import complexes as C
from flagtor import homology as H


def test_empty_complex():
    prof = H.reduced_homology(C.EMPTY_COMPLEX, H.INTEGERS)
    assert prof.ranks == {-1: 1}
    assert prof.torsion == {}


def test_point_and_two_points():
    pt = H.reduced_homology(C.points(1), H.INTEGERS)
    assert pt.ranks == {}
    two = H.reduced_homology(C.points(2), H.INTEGERS)
    assert two.ranks == {0: 1}
    coh = H.reduced_cohomology(C.points(2), H.INTEGERS)
    assert coh.ranks == {0: 1}


def test_circle():
    K = C.cycle_complex(4)
    for coeff in (H.RATIONALS, H.GF(2), H.INTEGERS):
        prof = H.reduced_homology(K, coeff)
        assert prof.ranks == {1: 1}
        assert prof.torsion == {}
    coh = H.reduced_cohomology(K, H.INTEGERS)
    assert coh.ranks == {1: 1}


def test_projective_plane_all_coefficients():
    K = C.real_projective_plane()
    z = H.reduced_homology(K, H.INTEGERS)
    assert z.ranks == {}
    assert z.torsion == {1: (2,)}
    f2 = H.reduced_homology(K, H.GF(2))
    assert f2.ranks == {1: 1, 2: 1}
    q = H.reduced_homology(K, H.RATIONALS)
    assert q.ranks == {}
    coh = H.reduced_cohomology(K, H.INTEGERS)
    assert coh.ranks == {}
    assert coh.torsion == {2: (2,)}


def test_spheres():
    assert H.reduced_homology(C.simplex_boundary(4), H.INTEGERS).ranks == {2: 1}
    assert H.reduced_homology(C.cross_polytope(3), H.INTEGERS).ranks == {2: 1}
    assert H.reduced_homology(C.icosahedron(), H.INTEGERS).ranks == {2: 1}
    assert H.reduced_homology(C.simplex(5), H.INTEGERS).ranks == {}


def test_cdim_and_hdim():
    assert H.cdim_Z(C.points(1)) == -1
    assert H.cdim_Z(C.EMPTY_COMPLEX) == -1
    assert H.cdim_Z(C.cycle_complex(4)) == 1
    rp2 = C.real_projective_plane()
    assert H.cdim_Z(rp2) == 2
    assert H.hdim_F(rp2, H.RATIONALS) == -1  # rationally acyclic
    assert H.hdim_F(rp2, H.GF(2)) == 2
    # cdim equals the max of hdim over Q and the torsion prime fields
    assert max(H.hdim_F(rp2, H.RATIONALS), H.hdim_F(rp2, H.GF(2))) == 2


def _random_complex(rng, m=None):
    m = m or rng.randint(2, 6)
    facets = [[v] for v in range(1, m + 1)]
    for _ in range(rng.randint(1, 6)):
        facets.append(sorted(rng.sample(range(1, m + 1), rng.randint(2, m))))
    return C.from_facets(m, facets)


def test_euler_characteristic_matches_homology():
    rng = random.Random(21)
    for _ in range(40):
        K = _random_complex(rng)
        prof = H.reduced_homology(K, H.RATIONALS)
        total = sum((-1) ** n * r for n, r in prof.ranks.items())
        assert total == C.reduced_euler_char(K)


def test_universal_coefficients_consistency():
    rng = random.Random(23)
    for _ in range(30):
        K = _random_complex(rng)
        z = H.reduced_homology(K, H.INTEGERS)
        q = H.reduced_homology(K, H.RATIONALS)
        assert q.ranks == z.ranks
        for p in (2, 3):
            fp = H.reduced_homology(K, H.GF(p))
            for n in set(z.ranks) | set(fp.ranks) | {-1, 0, 1, 2, 3}:
                tor_here = sum(1 for t in z.torsion_at(n) if t % p == 0)
                tor_below = sum(1 for t in z.torsion_at(n - 1) if t % p == 0)
                assert fp.rank(n) == z.rank(n) + tor_here + tor_below


def test_lemma_cdim_is_max_hdim_over_fields():
    rng = random.Random(29)
    for _ in range(25):
        K = _random_complex(rng)
        z = H.reduced_homology(K, H.INTEGERS)
        primes = set()
        for t in z.torsion.values():
            for q in t:
                p = 2
                while q % p:
                    p += 1
                primes.add(p)
        fields = [H.RATIONALS] + [H.GF(p) for p in sorted(primes)]
        assert z.cdim() == max(H.hdim_F(K, c) for c in fields)


def test_betti_numbers_match_sympy_rank_oracle():
    # independent route: dense boundary matrices, sympy ranks over Q
    import sympy

    rng = random.Random(37)
    for _ in range(10):
        K = _random_complex(rng, m=rng.randint(2, 5))
        geo = H.geometry(K)
        counts, matrices = H._restricted_columns(geo, K.full_mask)
        ranks = {}
        for k, cols in matrices.items():
            nrows = counts.get(k - 1, 0)
            M = sympy.zeros(nrows, len(cols))
            for c, col in enumerate(cols):
                for r, sign in col:
                    M[r, c] = sign
            ranks[k] = M.rank()
        prof = H.reduced_homology(K, H.RATIONALS)
        for d, f_d in counts.items():
            expected = f_d - ranks.get(d, 0) - ranks.get(d + 1, 0)
            assert prof.rank(d) == expected


def test_field_cohomology_ranks_match_homology():
    rng = random.Random(31)
    for _ in range(20):
        K = _random_complex(rng)
        for coeff in (H.RATIONALS, H.GF(2), H.GF(3)):
            hom = H.reduced_homology(K, coeff)
            coh = H.reduced_cohomology(K, coeff)
            assert hom.ranks == coh.ranks
