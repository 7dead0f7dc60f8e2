"""Reduced simplicial (co)homology over Q, F_p and Z.

Chain complexes are augmented: the empty face sits in degree -1, so the
homology of the empty complex {∅} is rank one in degree -1 and the
subset-sum bookkeeping downstream needs no special cases.  Faces are
oriented by ascending vertex order with boundary signs (-1)^position.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .exact_linalg import (NonPrimeModulusError, is_prime, rank_gf2_columns,
                           rank_mod_p_columns, rank_rational_columns,
                           snf_columns)


@dataclass(frozen=True)
class Coefficients:
    """One of the rationals, a prime field F_p, or the integers."""

    kind: str  # 'q' | 'fp' | 'z'
    p: int = None

    def __post_init__(self):
        if self.kind not in ("q", "fp", "z"):
            raise ValueError(f"unknown coefficient kind {self.kind!r}")
        if self.kind == "fp" and not is_prime(self.p):
            raise NonPrimeModulusError(f"{self.p} is not prime")

    @property
    def is_field(self):
        return self.kind != "z"

    def key(self):
        return (self.kind, self.p)

    def __str__(self):
        return {"q": "Q", "z": "Z"}.get(self.kind, f"F{self.p}")


RATIONALS = Coefficients("q")
INTEGERS = Coefficients("z")


def GF(p):
    return Coefficients("fp", p)


def parse_coefficients(text):
    """Parse 'q' | 'z' | 'fp:<p>' (as used on the command line)."""
    if text == "q":
        return RATIONALS
    if text == "z":
        return INTEGERS
    if text.startswith("fp:"):
        return GF(int(text[3:]))
    raise ValueError(f"bad coefficient spec {text!r}; want q, z or fp:<prime>")


@dataclass(frozen=True)
class HomologyProfile:
    """Per-degree rank and torsion of a reduced (co)homology computation.

    Only nonzero entries are stored.  ``torsion[n]`` is a sorted tuple of
    prime powers; it is empty unless the coefficients were Z.
    """

    ranks: dict = field(default_factory=dict)
    torsion: dict = field(default_factory=dict)

    def rank(self, n):
        return self.ranks.get(n, 0)

    def torsion_at(self, n):
        return self.torsion.get(n, ())

    def min_generators(self, n):
        return self.rank(n) + len(self.torsion_at(n))

    def degrees(self):
        return sorted(set(self.ranks) | set(self.torsion))

    def total_dim(self):
        """Sum of ranks (= total dimension over a field)."""
        return sum(self.ranks.values())

    def hdim(self):
        """Top degree >= 0 with nonzero reduced homology, else -1."""
        top = -1
        for n in self.degrees():
            if n >= 0 and (self.rank(n) or self.torsion_at(n)):
                top = max(top, n)
        return top

    def cdim(self):
        """Top degree >= 0 with nonzero reduced *cohomology*, else -1.

        Assumes the profile is an integral homology profile; torsion in
        degree n-1 makes H^n nonzero.
        """
        top = -1
        for n in self.degrees():
            if n >= 0 and self.rank(n):
                top = max(top, n)
            if self.torsion_at(n):
                top = max(top, n + 1)
        return top


# ---------------------------------------------------------------------------
# boundary geometry, precomputed once per complex
# ---------------------------------------------------------------------------

class ComplexGeometry:
    """Faces of a complex grouped by dimension with boundary templates."""

    def __init__(self, K):
        self.K = K
        by_dim = {}
        for f in K.faces:
            by_dim.setdefault(f.bit_count() - 1, []).append(f)
        self.by_dim = {d: sorted(fs) for d, fs in by_dim.items()}
        self.dim = max(self.by_dim)
        boundary = {}
        for d, fs in self.by_dim.items():
            if d < 0:
                continue
            for f in fs:
                subs = []
                low, i = f, 0
                while low:
                    bit = low & -low
                    subs.append((f ^ bit, -1 if i & 1 else 1))
                    low ^= bit
                    i += 1
                boundary[f] = tuple(subs)
        self.boundary = boundary
        if __debug__ and len(K.faces) <= 4096:
            self._check_boundary_squares_to_zero()

    def _check_boundary_squares_to_zero(self):
        for f, subs in self.boundary.items():
            if f.bit_count() < 2:
                continue
            acc = {}
            for sub, sign in subs:
                for subsub, sign2 in self.boundary[sub]:
                    acc[subsub] = acc.get(subsub, 0) + sign * sign2
            assert all(v == 0 for v in acc.values()), "boundary square nonzero"


@lru_cache(maxsize=64)
def geometry(K):
    return ComplexGeometry(K)


def _restricted_columns(geo, Jmask):
    """Faces of K_J by dimension plus boundary matrix columns.

    Returns (counts, matrices): counts maps dimension d to the face
    count f_d, matrices maps k to the columns [(row_index, sign), ...]
    of the boundary C_k -> C_{k-1} in local indices.
    """
    faces_by_dim = {}
    for d, fs in geo.by_dim.items():
        sel = [f for f in fs if not f & ~Jmask] if Jmask != geo.K.full_mask else fs
        if sel:
            faces_by_dim[d] = sel
    index = {}
    for d, fs in faces_by_dim.items():
        index[d] = {f: i for i, f in enumerate(fs)}
    counts = {d: len(fs) for d, fs in faces_by_dim.items()}
    matrices = {}
    for k in sorted(faces_by_dim):
        if k < 0:
            continue
        rows = index.get(k - 1, {})
        cols = []
        for f in faces_by_dim[k]:
            cols.append([(rows[sub], sign) for sub, sign in geo.boundary[f]])
        matrices[k] = cols
    return counts, matrices


def _field_ranks(matrices, coeff):
    ranks = {}
    for k, cols in matrices.items():
        if coeff.kind == "fp" and coeff.p == 2:
            bits = []
            for col in cols:
                b = 0
                for r, _ in col:
                    b ^= 1 << r
                bits.append(b)
            ranks[k] = rank_gf2_columns(bits)
        elif coeff.kind == "fp":
            ranks[k] = rank_mod_p_columns([dict(col) for col in cols], coeff.p)
        else:
            ranks[k] = rank_rational_columns([dict(col) for col in cols])
    return ranks


def _profile_restricted(geo, Jmask, coeff):
    counts, matrices = _restricted_columns(geo, Jmask)
    if coeff.is_field:
        ranks = _field_ranks(matrices, coeff)
        torsion = {}
    else:
        snfs = {k: snf_columns(cols) for k, cols in matrices.items()}
        ranks = {k: s.rank for k, s in snfs.items()}
        torsion = {}
        for k, s in snfs.items():
            t = s.torsion()
            if t:
                torsion[k - 1] = t
    profile_ranks = {}
    for d, f_d in counts.items():
        b = f_d - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if b:
            profile_ranks[d] = b
    return HomologyProfile(profile_ranks, torsion)


def reduced_homology(K, coeff):
    """Reduced homology of K; over Z torsion comes from Smith forms."""
    return _profile_restricted(geometry(K), K.full_mask, coeff)


def subcomplex_homology(K, Jmask, coeff):
    """Reduced homology of the full subcomplex K_J (J as a bitmask)."""
    return _profile_restricted(geometry(K), Jmask, coeff)


def reduced_cohomology(K, coeff):
    """Reduced cohomology.

    Over a field the transposed boundary matrices are eliminated
    directly; over Z ranks agree with homology and torsion shifts up one
    degree (universal coefficients).
    """
    geo = geometry(K)
    if coeff.is_field:
        counts, matrices = _restricted_columns(geo, K.full_mask)
        tr = {}
        for k, cols in matrices.items():
            nrows = counts.get(k - 1, 0)
            rows = [[] for _ in range(nrows)]
            for c, col in enumerate(cols):
                for r, sign in col:
                    rows[r].append((c, sign))
            tr[k] = rows
        ranks = _field_ranks(tr, coeff)
        profile_ranks = {}
        for d, f_d in counts.items():
            b = f_d - ranks.get(d, 0) - ranks.get(d + 1, 0)
            if b:
                profile_ranks[d] = b
        return HomologyProfile(profile_ranks, {})
    hom = reduced_homology(K, coeff)
    return HomologyProfile(dict(hom.ranks),
                           {n + 1: t for n, t in hom.torsion.items()})


def cdim_Z(K):
    """Top degree with nonvanishing reduced integral cohomology (>= -1)."""
    return reduced_homology(K, INTEGERS).cdim()


def hdim_F(K, coeff):
    """Top degree with nonvanishing reduced homology over a field."""
    if not coeff.is_field:
        raise ValueError("hdim is defined over a field")
    return reduced_homology(K, coeff).hdim()
