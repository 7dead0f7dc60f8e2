"""LS-category of moment-angle complexes, exactly, in the flag case.

For a flag complex K (other than a full simplex) the category of Z_K
equals 1 + the maximal integral cohomological dimension of a full
subcomplex, which also equals 1 + the maximal cohomological dimension of
a link; the Toomer invariant over a field replaces cdim by hdim and the
maximum of the Toomer invariants over Q and the torsion prime fields
recovers the category.  For non-flag K, flagifying and discounting by
nu(K) gives a lower bound.  A small exhaustive search for witnesses that
the cup-length attains the category is included; coming up empty is a
legitimate (and recorded) outcome.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import hochster, homology
from .complexes import (NotFlagError, flagification, full_subcomplex, is_flag,
                        link, nu_direct)
from .exact_linalg import rank_gf2_columns, rank_rational_columns


@dataclass
class CatReport:
    is_flag: bool
    cat_flag: int = None
    via_subcomplexes: int = 0
    via_links: int = 0
    toomer: dict = field(default_factory=dict)
    lower_bound_nonflag: int = None
    cup_witness: dict = None


def max_subcomplex_cdim(K, threads=1):
    profiles = hochster.subcomplex_profiles(K, homology.INTEGERS, threads)
    return max(prof.cdim() for prof in profiles.values())


def max_subcomplex_hdim(K, coeff, threads=1):
    profiles = hochster.subcomplex_profiles(K, coeff, threads)
    return max(prof.hdim() for prof in profiles.values())


def cat_zk(K, threads=1):
    """cat(Z_K) = 1 + max over J of cdim_Z K_J, for flag K.

    The full simplex is the one degenerate case (Z_K a polydisc): 0.
    """
    if not is_flag(K):
        raise NotFlagError("the exact category formula needs a flag complex")
    if K.full_mask in K.faces:
        return 0
    return 1 + max_subcomplex_cdim(K, threads)


def cat_via_links(K):
    """1 + max over faces I (the empty one included) of cdim_Z lk_K I."""
    best = -1
    for I in sorted(K.faces):
        lk = link(K, I)
        best = max(best, homology.reduced_homology(lk, homology.INTEGERS).cdim())
    return 1 + best


def toomer(K, coeff, threads=1):
    """Toomer invariant of Z_K over a field: 1 + max over J of hdim."""
    if not is_flag(K):
        raise NotFlagError("the Toomer formula needs a flag complex")
    if not coeff.is_field:
        raise ValueError("Toomer invariant needs field coefficients")
    return 1 + max_subcomplex_hdim(K, coeff, threads)


def toomer_report(K, threads=1):
    """Toomer invariants over Q and every torsion prime field, plus the max.

    The primes are harvested from the Smith forms of the subcomplex
    sweep; the maximum over these fields equals cat(Z_K).
    """
    fields = [homology.RATIONALS]
    fields += [homology.GF(p) for p in hochster.torsion_primes(K, threads)]
    values = {str(c): toomer(K, c, threads) for c in fields}
    return {"by_field": values, "max": max(values.values())}


def cat_lower_bound(K, threads=1):
    """1 - nu(K) + max over J of cdim_Z of the flagification's K_J.

    Equals cat(Z_K) itself when K is flag (nu = 0).
    """
    Kf = flagification(K)
    return 1 - nu_direct(K) + max_subcomplex_cdim(Kf, threads)


# ---------------------------------------------------------------------------
# cup-length witnesses
# ---------------------------------------------------------------------------

def _components(K):
    """Vertex masks of the connected components of K."""
    seen = 0
    comps = []
    edges = [f for f in K.faces if f.bit_count() == 2]
    for v in range(K.m):
        bit = 1 << v
        if seen & bit:
            continue
        comp = bit
        grow = True
        while grow:
            grow = False
            for e in edges:
                if e & comp and e & ~comp:
                    comp |= e
                    grow = True
        comps.append(comp)
        seen |= comp
    return comps


def _partitions(vertices, parts):
    """Set partitions of the list into exactly `parts` blocks.

    Canonical order: each block is opened by the smallest element not in
    an earlier block, so every partition appears exactly once.
    """
    if len(vertices) < parts or parts < 1:
        return

    def rec(i, blocks):
        remaining = len(vertices) - i
        if remaining < parts - len(blocks):
            return
        if i == len(vertices):
            if len(blocks) == parts:
                yield [list(b) for b in blocks]
            return
        v = vertices[i]
        for b in blocks:
            b.append(v)
            yield from rec(i + 1, blocks)
            b.pop()
        if len(blocks) < parts:
            blocks.append([v])
            yield from rec(i + 1, blocks)
            blocks.pop()

    yield from rec(0, [])


def _cocycle_values(K, Smask, parts, comps_choice):
    """The product cochain on top faces of K_S, with join-product signs.

    parts: list of vertex masks A_1..A_{d+1}; comps_choice: the chosen
    component mask within each part.  Returns (d_faces, values) where
    values[i] is the coefficient on the i-th d-face of K_S.
    """
    d = len(parts) - 1
    faces = sorted(f for f in K.faces if not f & ~Smask
                   and f.bit_count() == d + 1)
    values = []
    for f in faces:
        val = 1
        reps = []
        for part, comp in zip(parts, comps_choice):
            inter = f & part
            if inter.bit_count() != 1:
                val = 0
                break
            reps.append(inter)
            if not inter & comp:
                val = 0
        if val:
            inv = sum(1 for a in range(d + 1) for b in range(a + 1, d + 1)
                      if reps[a] > reps[b])
            val = -1 if inv & 1 else 1
        values.append(val)
    return faces, values


def _is_cocycle(K, Smask, faces, values):
    """Sanity guard: the product cochain must vanish under the coboundary."""
    d = faces[0].bit_count() - 1 if faces else 0
    index = {f: i for i, f in enumerate(faces)}
    geo = homology.geometry(K)
    for tau in K.faces:
        if tau & ~Smask or tau.bit_count() != d + 2:
            continue
        total = 0
        for sub, sign in geo.boundary[tau]:
            i = index.get(sub)
            if i is not None:
                total += sign * values[i]
        if total:
            return False
    return True


def _is_coboundary(K, Smask, faces, values, p=None):
    """Is the cochain a coboundary in the reduced complex of K_S?"""
    d = faces[0].bit_count() - 1 if faces else 0
    lower = sorted(f for f in K.faces if not f & ~Smask
                   and f.bit_count() == d)
    geo = homology.geometry(K)
    # columns of delta: for each (d-1)-face g, the row vector over d-faces
    cols = []
    for g in lower:
        col = {}
        for i, f in enumerate(faces):
            for sub, sign in geo.boundary[f]:
                if sub == g:
                    col[i] = sign
        cols.append(col)
    target = {i: v for i, v in enumerate(values) if v}
    if p == 2:
        bit_cols = []
        for col in cols:
            b = 0
            for r, v in col.items():
                if v % 2:
                    b ^= 1 << r
            bit_cols.append(b)
        tb = 0
        for r, v in target.items():
            if v % 2:
                tb ^= 1 << r
        base = rank_gf2_columns(bit_cols)
        return rank_gf2_columns(bit_cols + [tb]) == base
    base = rank_rational_columns(cols)
    return rank_rational_columns(cols + [dict(target)]) == base


def cup_witness_search(K, threads=1):
    """Look for disjoint A_1..A_{d+1} certifying cup-length = cat(Z_K).

    Tries supports in decreasing size and set partitions into d+1 parts,
    each inducing a disconnected subcomplex; the candidate classes are
    products of component-indicator 0-cocycles (which span, so checking
    all component choices decides each partition).  Returns the first
    witness found, or None: not finding one proves nothing.
    """
    if not is_flag(K):
        raise NotFlagError("the witness search targets flag complexes")
    d = max_subcomplex_cdim(K, threads)
    if d < 0:
        return None
    nparts = d + 1
    supports = sorted(range(1 << K.m), key=lambda S: (-S.bit_count(), S))
    for Smask in supports:
        if Smask.bit_count() < 2 * nparts:
            continue
        verts = [v for v in range(K.m) if (Smask >> v) & 1]
        for blocks in _partitions(verts, nparts):
            parts = []
            comps_by_part = []
            ok = True
            for b in blocks:
                pmask = 0
                for v in b:
                    pmask |= 1 << v
                sub = full_subcomplex(K, pmask)
                comps = _components(sub)
                if len(comps) < 2:
                    ok = False
                    break
                # translate component masks back to parent vertex bits
                lifted = []
                for comp in comps:
                    lift = 0
                    for i in range(sub.m):
                        if (comp >> i) & 1:
                            lift |= 1 << (sub.labels[i] - 1)
                    lifted.append(lift)
                parts.append(pmask)
                comps_by_part.append(lifted)
            if not ok:
                continue
            choice = [0] * nparts

            def try_choices(i):
                if i == nparts:
                    chosen = [comps_by_part[j][choice[j]] for j in range(nparts)]
                    faces, values = _cocycle_values(K, Smask, parts, chosen)
                    if not any(values):
                        return None
                    assert _is_cocycle(K, Smask, faces, values), \
                        "product cochain failed the cocycle check"
                    for p in (None, 2):
                        if not _is_coboundary(K, Smask, faces, values, p):
                            return {
                                "support": Smask,
                                "parts": parts,
                                "components": chosen,
                                "field": "Q" if p is None else "F2",
                            }
                    return None
                for c in range(len(comps_by_part[i])):
                    choice[i] = c
                    found = try_choices(i + 1)
                    if found:
                        return found
                return None

            witness = try_choices(0)
            if witness:
                witness["dimension"] = d
                return witness
    return None


def cat_report(K, threads=1):
    flag = is_flag(K)
    report = CatReport(is_flag=flag)
    report.via_subcomplexes = 1 + max_subcomplex_cdim(K, threads)
    report.via_links = cat_via_links(K)
    if flag:
        report.cat_flag = cat_zk(K, threads)
        report.toomer = toomer_report(K, threads)
    else:
        report.lower_bound_nonflag = cat_lower_bound(K, threads)
    return report
