"""Homology of moment-angle complexes via full-subcomplex decompositions.

H_p of the moment-angle complex Z_K is the direct sum over all vertex
subsets J of the reduced homology of K_J in degree p-|J|-1; the real
version R_K uses degree p-1.  The expensive part is one pass over all
2^m full subcomplexes; its results are memoized in a process-wide cache
(keyed by the complex and the coefficients) that every other module
shares, and the pass itself can be split across worker processes.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field

from . import homology
from .complexes import SimplicialComplex

SWEEP_CAP = 24


class ComplexTooLargeError(ValueError):
    """A full 2^m sweep was requested for m beyond the supported cap."""


@dataclass(frozen=True)
class MultiDegree:
    """Homological index i plus a halved exponent vector alpha.

    The externally visible degree is (-i, 2*alpha); serializers double
    the exponents on output.
    """

    i: int
    alpha: tuple

    def display(self):
        return {"t": -self.i, "lambda": [2 * a for a in self.alpha]}


@dataclass
class HochsterTable:
    """Per-(J, p) summands of H_*(Z_K) or H_*(R_K), plus totals."""

    kind: str  # 'zk' | 'rk'
    entries: dict = field(default_factory=dict)  # (Jmask, p) -> (rank, torsion)
    totals_rank: dict = field(default_factory=dict)
    totals_torsion: dict = field(default_factory=dict)

    def betti(self):
        return dict(self.totals_rank)


# ---------------------------------------------------------------------------
# the shared subcomplex-homology cache
# ---------------------------------------------------------------------------

_CACHE = {}


def clear_cache():
    _CACHE.clear()


def _cache_for(K, coeff):
    return _CACHE.setdefault((K.canonical_key(), coeff.key()), {})


def cache_snapshot(K, coeff):
    return dict(_cache_for(K, coeff))


def load_cache(K, coeff, profiles):
    _cache_for(K, coeff).update(profiles)


def profile_for_subset(K, Jmask, coeff):
    store = _cache_for(K, coeff)
    prof = store.get(Jmask)
    if prof is None:
        prof = homology.subcomplex_homology(K, Jmask, coeff)
        store[Jmask] = prof
    return prof


_WORKER = None


def _worker_init(m, faces, coeff_key):
    global _WORKER
    K = SimplicialComplex(m, frozenset(faces))
    geo = homology.geometry(K)
    coeff = homology.Coefficients(*coeff_key)
    _WORKER = (geo, coeff)


def _worker_chunk(masks):
    geo, coeff = _WORKER
    return [(J, homology._profile_restricted(geo, J, coeff)) for J in masks]


def subcomplex_profiles(K, coeff, threads=1):
    """Reduced homology of every full subcomplex K_J, keyed by bitmask."""
    if K.m > SWEEP_CAP:
        raise ComplexTooLargeError(
            f"full subcomplex sweep needs m <= {SWEEP_CAP}, got m = {K.m}")
    store = _cache_for(K, coeff)
    total = 1 << K.m
    missing = [J for J in range(total) if J not in store]
    if not missing:
        return dict(store)
    if threads > 1 and len(missing) >= 1 << 12:
        chunk = max(256, len(missing) // (8 * threads))
        chunks = [missing[i:i + chunk] for i in range(0, len(missing), chunk)]
        with multiprocessing.Pool(
                threads, initializer=_worker_init,
                initargs=(K.m, tuple(K.faces), coeff.key())) as pool:
            for part in pool.imap_unordered(_worker_chunk, chunks):
                store.update(part)
    else:
        geo = homology.geometry(K)
        for J in missing:
            store[J] = homology._profile_restricted(geo, J, coeff)
    return dict(store)


# ---------------------------------------------------------------------------
# the two decompositions
# ---------------------------------------------------------------------------

def _assemble(kind, profiles, shift_by_J):
    table = HochsterTable(kind)
    for J, prof in profiles.items():
        off = J.bit_count() + 1 if shift_by_J else 1
        for n in prof.degrees():
            p = n + off
            r = prof.rank(n)
            t = prof.torsion_at(n)
            if r or t:
                table.entries[(J, p)] = (r, t)
                if r:
                    table.totals_rank[p] = table.totals_rank.get(p, 0) + r
                if t:
                    table.totals_torsion.setdefault(p, []).extend(t)
    table.totals_torsion = {p: tuple(sorted(t))
                            for p, t in table.totals_torsion.items()}
    return table


def zk_homology(K, coeff, threads=1):
    """H_p(Z_K) = sum over J of reduced H_{p-|J|-1}(K_J)."""
    profiles = subcomplex_profiles(K, coeff, threads)
    return _assemble("zk", profiles, shift_by_J=True)


def rk_homology(K, coeff, threads=1):
    """H_p(R_K) = sum over J of reduced H_{p-1}(K_J)."""
    profiles = subcomplex_profiles(K, coeff, threads)
    return _assemble("rk", profiles, shift_by_J=False)


def _dualize(profiles):
    """Cohomology profiles of every subcomplex from the homology ones.

    Ranks agree; over Z the torsion of H^{n+1} is that of H_n.
    """
    return {J: homology.HomologyProfile(
        dict(p.ranks), {n + 1: t for n, t in p.torsion.items()})
        for J, p in profiles.items()}


def zk_cohomology(K, coeff, threads=1):
    """H^p(Z_K) = sum over J of reduced H^{p-|J|-1}(K_J)."""
    profiles = subcomplex_profiles(K, coeff, threads)
    return _assemble("zk", _dualize(profiles), shift_by_J=True)


def rk_cohomology(K, coeff, threads=1):
    """H^p(R_K) = sum over J of reduced H^{p-1}(K_J)."""
    profiles = subcomplex_profiles(K, coeff, threads)
    return _assemble("rk", _dualize(profiles), shift_by_J=False)


def torsion_primes(K, threads=1):
    """Primes dividing any torsion coefficient of any K_J (for field sweeps)."""
    profiles = subcomplex_profiles(K, homology.INTEGERS, threads)
    primes = set()
    for prof in profiles.values():
        for t in prof.torsion.values():
            for q in t:
                p = 2
                while p * p <= q:
                    if q % p == 0:
                        break
                    p += 1
                primes.add(p if q % p == 0 else q)
    return sorted(primes)
