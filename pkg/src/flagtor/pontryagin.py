"""Tor of the loop homology of a moment-angle complex, two independent ways.

For a flag complex K, Tor_n of the Pontryagin algebra H_*(ΩZ_K) in
multidegree (-|J|, 2J) is the reduced homology of the full subcomplex
K_J in degree n-1, and vanishes in every non-squarefree multidegree.
This module computes the Tor table along that decomposition and,
independently, as the homology of finite multidegree slices of the
twisted complex Λ[u_1..u_m] ⊗ k<K> whose differential peels one letter
off the divided-power part:

    d(u_I ⊗ χ_α) = sum over j in supp α of (u_I ∧ u_j) ⊗ χ_{α - e_j}.

It also enumerates a monomial basis of the quadratic dual algebra

    T(u_1..u_m) / (u_i^2;  u_i u_j + u_j u_i for edges {i,j})

and computes Ext of the Stanley-Reisner ring by a brute-force cobar
slice, so the diagonal identity between the two can be verified on
actual numbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import hochster, homology
from .complexes import NotFlagError, adjacency, is_flag
from .exact_linalg import (rank_gf2_columns, rank_mod_p_columns,
                           rank_rational_columns, snf_columns)

DEFAULT_DEGREE_BOUND = 8


class BoundExceededError(ValueError):
    """Requested multidegree exceeds the configured total-degree bound."""


@dataclass
class TorTable:
    """(n, Jmask) -> (rank, torsion); support is squarefree with n >= 0."""

    entries: dict = field(default_factory=dict)
    exact: bool = True  # False over Z: counts are lower-bound data

    def rank(self, n, Jmask):
        return self.entries.get((n, Jmask), (0, ()))[0]

    def by_degree(self):
        out = {}
        for (n, _), (r, _) in self.entries.items():
            out[n] = out.get(n, 0) + r
        return out


def _require_flag(K):
    if not is_flag(K):
        raise NotFlagError("this operation needs a flag complex")


# ---------------------------------------------------------------------------
# route one: full subcomplexes
# ---------------------------------------------------------------------------

def tor_via_subcomplexes(K, coeff, threads=1):
    _require_flag(K)
    profiles = hochster.subcomplex_profiles(K, coeff, threads)
    table = TorTable(exact=coeff.is_field)
    for J, prof in profiles.items():
        for d in prof.degrees():
            r = prof.rank(d)
            t = prof.torsion_at(d)
            if r or t:
                table.entries[(d + 1, J)] = (r, t)
    return table


def tor_for_subset(K, Jmask, coeff):
    """The single multidegree (-|J|, 2J) column of the Tor table.

    Works for any m (no 2^m sweep): used when the full table is out of
    reach but one slice, typically J = [m], is wanted.
    """
    _require_flag(K)
    prof = hochster.profile_for_subset(K, Jmask, coeff)
    out = {}
    for d in prof.degrees():
        r = prof.rank(d)
        t = prof.torsion_at(d)
        if r or t:
            out[d + 1] = (r, t)
    return out


def generator_relation_counts(K, coeff, threads=1):
    """Minimal generator/relation counts of the loop homology algebra.

    Over a field the counts are exact; over Z they are lower bounds (the
    minimal number of generators of the corresponding Tor modules).
    Returns (generators_by_J, relations_by_J, totals dict).
    """
    _require_flag(K)
    profiles = hochster.subcomplex_profiles(K, coeff, threads)
    gens, rels = {}, {}
    for J, prof in profiles.items():
        g = prof.min_generators(0)
        r = prof.min_generators(1)
        if g:
            gens[J] = g
        if r:
            rels[J] = r
    totals = {"generators": sum(gens.values()), "relations": sum(rels.values()),
              "exact": coeff.is_field}
    return gens, rels, totals


def gens_rels_for_subset(K, Jmask, coeff):
    prof = hochster.profile_for_subset(K, Jmask, coeff)
    return prof.min_generators(0), prof.min_generators(1)


# ---------------------------------------------------------------------------
# route two: multidegree slices of the twisted exterior complex
# ---------------------------------------------------------------------------

def koszul_slice(K, beta):
    """Basis and differential of the slice at multidegree 2*beta.

    Basis elements are pairs (Imask, alpha) with I squarefree,
    supp(alpha) a face, and I + alpha = beta; the homological index is
    |alpha|.  Returns (bases, matrices) where bases[t] lists the basis
    and matrices[t] holds the columns of d: C_t -> C_{t-1}.
    """
    beta = tuple(beta)
    if len(beta) != K.m or any(b < 0 for b in beta):
        raise ValueError("beta must be a nonnegative vector of length m")
    # supp(alpha) always contains the coordinates with beta_i >= 2 and is
    # otherwise a subset of those with beta_i = 1, so it is enough to run
    # over the faces pinned between the two; the exterior part I is then
    # free on the pinned coordinates.
    pin = 0
    ones = 0
    for i, b in enumerate(beta):
        if b >= 2:
            pin |= 1 << i
        elif b == 1:
            ones |= 1 << i
    bases = {}
    for G in K.faces:
        if G & pin != pin or G & ~(pin | ones):
            continue
        T = G ^ pin  # the support within the squarefree coordinates
        base_I = ones & ~T
        R = pin
        while True:  # all subsets R of pin
            Imask = base_I | R
            alpha = tuple(b - ((Imask >> i) & 1) for i, b in enumerate(beta))
            bases.setdefault(sum(alpha), []).append((Imask, alpha))
            if R == 0:
                break
            R = (R - 1) & pin
    for t in bases:
        bases[t].sort()
    index = {t: {b: i for i, b in enumerate(bs)} for t, bs in bases.items()}
    matrices = {}
    for t, bs in bases.items():
        if t == 0:
            continue
        rows = index.get(t - 1, {})
        cols = []
        for Imask, alpha in bs:
            col = []
            for j, a in enumerate(alpha):
                if not a:
                    continue
                bit = 1 << j
                if Imask & bit:
                    continue  # u_j ∧ u_j = 0
                below = (Imask & (bit - 1)).bit_count()
                sign = -1 if below & 1 else 1
                tgt = alpha[:j] + (a - 1,) + alpha[j + 1:]
                col.append((rows[(Imask | bit, tgt)], sign))
            cols.append(col)
        matrices[t] = cols
    return bases, matrices


def tor_via_koszul_complex(K, coeff, beta):
    """Homology of the slice at 2*beta, per homological degree.

    For squarefree beta = J this must match tor_via_subcomplexes; for
    non-squarefree beta it must vanish entirely.  Returns a dict
    t -> (rank, torsion).
    """
    _require_flag(K)
    bases, matrices = koszul_slice(K, beta)
    return _slice_homology(bases, matrices, coeff)


def _slice_homology(bases, matrices, coeff):
    if coeff.is_field:
        ranks = {}
        for t, cols in matrices.items():
            if coeff.kind == "fp" and coeff.p == 2:
                bits = []
                for col in cols:
                    b = 0
                    for r, _ in col:
                        b ^= 1 << r
                    bits.append(b)
                ranks[t] = rank_gf2_columns(bits)
            elif coeff.kind == "fp":
                ranks[t] = rank_mod_p_columns([dict(c) for c in cols], coeff.p)
            else:
                ranks[t] = rank_rational_columns([dict(c) for c in cols])
        torsion = {}
    else:
        snfs = {t: snf_columns(cols) for t, cols in matrices.items()}
        ranks = {t: s.rank for t, s in snfs.items()}
        torsion = {}
        for t, s in snfs.items():
            tor = s.torsion()
            if tor:
                torsion[t - 1] = tor
    out = {}
    for t, bs in bases.items():
        r = len(bs) - ranks.get(t, 0) - ranks.get(t + 1, 0)
        tor = torsion.get(t, ())
        if r or tor:
            out[t] = (r, tor)
    return out


# ---------------------------------------------------------------------------
# the quadratic dual: normal-word basis
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KoszulDualWord:
    """A basis monomial u_{w_1}...u_{w_s} of the quadratic dual algebra."""

    word: tuple
    degree: hochster.MultiDegree

    @classmethod
    def make(cls, word, m):
        alpha = [0] * m
        for v in word:
            alpha[v - 1] += 1
        return cls(tuple(word), hochster.MultiDegree(len(word), tuple(alpha)))


def _can_append(word, x, adj):
    """Keep only words that are canonical in their commutation class.

    Letters joined by an edge anticommute, so a word is a basis monomial
    iff it is the lexicographically least in its class and no two equal
    letters can be brought together (those words are zero, u_i^2 = 0).
    Scanning the suffix of letters that commute with x decides both.
    """
    xbit = 1 << (x - 1)
    for y in reversed(word):
        if y == x:
            return False  # the two occurrences would meet: square, zero
        if not adj[y - 1] & xbit:
            return True  # blocked: x cannot move further left
        if y > x:
            return False  # x could sit before y: smaller representative
    return True


def normal_words(K, length):
    """All basis words of the given length, in lexicographic order."""
    adj = adjacency(K)
    out = []
    word = []

    def extend(depth):
        if depth == length:
            out.append(tuple(word))
            return
        for x in range(1, K.m + 1):
            if _can_append(word, x, adj):
                word.append(x)
                extend(depth + 1)
                word.pop()

    extend(0)
    return out


def koszul_dual_basis(K, length):
    """Basis words of length s plus their count per exponent vector."""
    words = normal_words(K, length)
    counts = {}
    for w in words:
        alpha = [0] * K.m
        for v in w:
            alpha[v - 1] += 1
        counts[tuple(alpha)] = counts.get(tuple(alpha), 0) + 1
    return [KoszulDualWord.make(w, K.m) for w in words], counts


def normal_word_counts(K, max_total):
    """Counts per exponent vector for all lengths 0..max_total."""
    adj = adjacency(K)
    counts = {tuple([0] * K.m): 1}
    word = []
    alpha = [0] * K.m

    def extend(depth):
        if depth:
            key = tuple(alpha)
            counts[key] = counts.get(key, 0) + 1
        if depth == max_total:
            return
        for x in range(1, K.m + 1):
            if _can_append(word, x, adj):
                word.append(x)
                alpha[x - 1] += 1
                extend(depth + 1)
                alpha[x - 1] -= 1
                word.pop()

    extend(0)
    return counts


# ---------------------------------------------------------------------------
# cobar construction of the Stanley-Reisner coalgebra
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CobarComplexSlice:
    """The finite piece of the cobar construction at multidegree 2*beta.

    ``words[s]`` lists the length-s tensor words; ``matrices[s]`` holds
    the columns of the (degree-raising) differential C_s -> C_{s+1}.
    """

    beta: tuple
    words: dict
    matrices: dict

    def __iter__(self):  # allows `words, matrices = cobar_slice(...)`
        return iter((self.words, self.matrices))


def cobar_slice(K, beta):
    """Words and differential of the cobar slice at multidegree 2*beta.

    Words are tuples of nonzero exponent vectors with face support
    summing to beta; the differential splits one letter via the
    deconcatenation coproduct with alternating signs:

        d[x_1|..|x_s] = sum_k (-1)^k [x_1|..|x'_k|x''_k|..|x_s].

    Every letter has even total degree, so all bar signs collapse to
    this simplicial alternation (which is what makes d^2 = 0 over Z).
    """
    beta = tuple(beta)
    letters = [l for l in _subvectors(beta)
               if any(l) and _support_mask(l) in K.faces]
    words = {0: [()]} if not any(beta) else {}
    if any(beta):
        acc = []

        def gen_words(remaining, cur):
            if not any(remaining):
                acc.append(tuple(cur))
                return
            for l in letters:
                if all(a <= r for a, r in zip(l, remaining)):
                    cur.append(l)
                    gen_words(tuple(r - a for r, a in zip(remaining, l)), cur)
                    cur.pop()

        gen_words(beta, [])
        for w in acc:
            words.setdefault(len(w), []).append(w)
    index = {s: {w: i for i, w in enumerate(ws)} for s, ws in words.items()}
    matrices = {}
    for s, ws in words.items():
        tgt = index.get(s + 1)
        if not tgt:
            continue
        cols = []
        for w in ws:
            col = {}
            for k, letter in enumerate(w, start=1):
                sign = -1 if k & 1 else 1
                for bsplit, gsplit in _splits(letter):
                    nw = w[:k - 1] + (bsplit, gsplit) + w[k:]
                    r = tgt[nw]
                    col[r] = col.get(r, 0) + sign
            cols.append([(r, v) for r, v in col.items() if v])
        matrices[s] = cols
    return CobarComplexSlice(beta, words, matrices)


def _subvectors(vec):
    """All vectors 0 <= w <= vec coordinatewise."""
    out = [tuple()]
    for v in vec:
        out = [w + (a,) for w in out for a in range(v + 1)]
    return out


def _support_mask(vec):
    mask = 0
    for i, a in enumerate(vec):
        if a:
            mask |= 1 << i
    return mask


def _splits(letter):
    """Nontrivial splittings beta'+gamma' = letter with both parts nonzero."""
    return [(w, tuple(a - b for a, b in zip(letter, w)))
            for w in _subvectors(letter)
            if any(w) and any(a - b for a, b in zip(letter, w))]


def cobar_ext(K, coeff, beta, bound=DEFAULT_DEGREE_BOUND):
    """dim Ext^s of the Stanley-Reisner ring at multidegree 2*beta.

    Field coefficients only.  For flag K this is nonzero only on the
    diagonal s = |beta| where it equals the normal-word count.
    """
    if not coeff.is_field:
        raise ValueError("cobar Ext needs field coefficients")
    beta = tuple(beta)
    if sum(beta) > bound:
        raise BoundExceededError(f"|beta| = {sum(beta)} exceeds bound {bound}")
    words, matrices = cobar_slice(K, beta)
    ranks = {}
    for s, cols in matrices.items():
        if coeff.kind == "fp" and coeff.p == 2:
            bits = []
            for col in cols:
                b = 0
                for r, v in col:
                    if v % 2:
                        b ^= 1 << r
                bits.append(b)
            ranks[s] = rank_gf2_columns(bits)
        elif coeff.kind == "fp":
            ranks[s] = rank_mod_p_columns([dict(c) for c in cols], coeff.p)
        else:
            ranks[s] = rank_rational_columns([dict(c) for c in cols])
    dims = {}
    for s, ws in words.items():
        d = len(ws) - ranks.get(s, 0) - ranks.get(s - 1, 0)
        if d:
            dims[s] = d
    return dims


# ---------------------------------------------------------------------------
# Milnor-Moore bookkeeping
# ---------------------------------------------------------------------------

def milnor_moore_check(K, coeff, threads=1):
    """Total dimension of the Tor table vs. total Betti of Z_K.

    For flag K the loop-homology spectral sequence degenerates, so the
    two sums agree; a mismatch means an implementation bug.
    """
    _require_flag(K)
    if not coeff.is_field:
        raise ValueError("Milnor-Moore totals need field coefficients")
    profiles = hochster.subcomplex_profiles(K, coeff, threads)
    e2 = sum(prof.total_dim() for prof in profiles.values())
    einf = sum(hochster.zk_homology(K, coeff, threads).totals_rank.values())
    return {"e2_total": e2, "einf_total": einf, "collapse": e2 == einf}
