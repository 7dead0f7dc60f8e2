"""Truncated multigraded power series with exact coefficients.

A series in m variables is a finite map from exponent vectors to exact
numbers (Python ints, or Fractions where logarithms force them), cut off
at a total-degree bound.  The monomial keyed by alpha stands for
t^{-|alpha|} lambda^{2 alpha}: in the flag case every Poincare series in
scope is supported on that diagonal, and the one series that is not (the
loop homology of the ambient polyhedral-product space) differs from a
diagonal one by the factor prod (1 + t^{-1} lambda_i^2), whose terms are
again diagonal monomials.  Serializers restore the (t, lambda) exponents
on output.

Internally exponent vectors are packed into integers, five bits per
variable, and terms are bucketed by total degree; convolution then runs
on plain integer additions, which is what makes the degree-8 products
over eight variables cheap.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd

from .complexes import (NotFlagError, chi_subcomplexes, f_vector, is_flag)

_SHIFT = 5
_MAXCOORD = (1 << _SHIFT) - 1


class NonUnitConstantTermError(ValueError):
    pass


class IntegralityViolationError(ValueError):
    """A quantity that must be a non-negative integer came out otherwise."""


def _pack(alpha):
    key = 0
    for i, a in enumerate(alpha):
        if a:
            key |= a << (_SHIFT * i)
    return key


def _unpack(key, nvars):
    return tuple((key >> (_SHIFT * i)) & _MAXCOORD for i in range(nvars))


class MultiSeries:
    """A truncated formal power series over exact rationals."""

    __slots__ = ("nvars", "trunc", "_buckets")

    def __init__(self, nvars, trunc, terms=None, _buckets=None):
        if trunc > _MAXCOORD:
            raise ValueError(f"truncation capped at {_MAXCOORD}")
        self.nvars = nvars
        self.trunc = trunc
        self._buckets = {}
        if _buckets is not None:
            for d, b in _buckets.items():
                if d <= trunc and b:
                    self._buckets[d] = dict(b)
        elif terms:
            for k, v in terms.items():
                d = sum(k)
                if v and d <= trunc:
                    self._buckets.setdefault(d, {})[_pack(k)] = v

    @classmethod
    def one(cls, nvars, trunc):
        return cls(nvars, trunc, _buckets={0: {0: 1}})

    @property
    def terms(self):
        out = {}
        for b in self._buckets.values():
            for k, v in b.items():
                out[_unpack(k, self.nvars)] = v
        return out

    def coefficient(self, alpha):
        d = sum(alpha)
        return self._buckets.get(d, {}).get(_pack(alpha), 0)

    def __eq__(self, other):
        if not isinstance(other, MultiSeries) or self.nvars != other.nvars:
            return NotImplemented
        mine = {d: b for d, b in self._buckets.items() if b}
        theirs = {d: b for d, b in other._buckets.items() if b}
        return mine == theirs

    def __repr__(self):
        parts = [f"{v}*x^{k}" for k, v in sorted(self.terms.items())[:6]]
        more = "..." if sum(len(b) for b in self._buckets.values()) > 6 else ""
        return (f"MultiSeries(n={self.nvars}, N={self.trunc}, "
                f"{' + '.join(parts)}{more})")

    def add(self, other):
        trunc = min(self.trunc, other.trunc)
        out = {d: dict(b) for d, b in self._buckets.items() if d <= trunc}
        for d, b in other._buckets.items():
            if d > trunc:
                continue
            tgt = out.setdefault(d, {})
            for k, v in b.items():
                nv = tgt.get(k, 0) + v
                if nv:
                    tgt[k] = nv
                else:
                    del tgt[k]
        return MultiSeries(self.nvars, trunc, _buckets=out)

    def scale(self, c):
        if not c:
            return MultiSeries(self.nvars, self.trunc)
        return MultiSeries(self.nvars, self.trunc, _buckets={
            d: {k: c * v for k, v in b.items()}
            for d, b in self._buckets.items()})

    def mul(self, other):
        trunc = min(self.trunc, other.trunc)
        out = {}
        for d1, b1 in self._buckets.items():
            if d1 > trunc:
                continue
            for d2, b2 in other._buckets.items():
                d = d1 + d2
                if d > trunc:
                    continue
                tgt = out.setdefault(d, {})
                for k1, v1 in b1.items():
                    for k2, v2 in b2.items():
                        k = k1 + k2
                        nv = tgt.get(k, 0) + v1 * v2
                        if nv:
                            tgt[k] = nv
                        else:
                            del tgt[k]
        return MultiSeries(self.nvars, trunc, _buckets=out)

    def _unit_check(self):
        if self._buckets.get(0, {}).get(0, 0) != 1:
            raise NonUnitConstantTermError("constant term must be 1")

    def inverse(self):
        """Degree-by-degree inverse of a series with constant term 1."""
        self._unit_check()
        out = {0: {0: 1}}
        for d in range(1, self.trunc + 1):
            cur = {}
            for dd, b in self._buckets.items():
                if not 0 < dd <= d:
                    continue
                prev = out.get(d - dd)
                if not prev:
                    continue
                for k1, v1 in b.items():
                    for k2, v2 in prev.items():
                        k = k1 + k2
                        nv = cur.get(k, 0) - v1 * v2
                        if nv:
                            cur[k] = nv
                        else:
                            del cur[k]
            if cur:
                out[d] = cur
        return MultiSeries(self.nvars, self.trunc, _buckets=out)

    def neg_log(self):
        """-log of a series with constant term 1: sum (1-f)^k / k."""
        self._unit_check()
        u = {d: ({k: -v for k, v in b.items()} if d else
                 {k: -v for k, v in b.items() if k})
             for d, b in self._buckets.items()}
        u = {d: b for d, b in u.items() if b}
        ms_u = MultiSeries(self.nvars, self.trunc, _buckets=u)
        out = {}
        power = MultiSeries.one(self.nvars, self.trunc)
        for k in range(1, self.trunc + 1):
            power = power.mul(ms_u)
            if not power._buckets:
                break
            frac = Fraction(1, k)
            for d, b in power._buckets.items():
                tgt = out.setdefault(d, {})
                for key, v in b.items():
                    nv = tgt.get(key, 0) + frac * v
                    if nv:
                        tgt[key] = nv
                    else:
                        del tgt[key]
        return MultiSeries(self.nvars, self.trunc, _buckets=out)

    def z_graded(self):
        """Collapse to totals per degree: list indexed by |alpha|."""
        out = [0] * (self.trunc + 1)
        for d, b in self._buckets.items():
            out[d] = sum(b.values())
        return out


def mul(f, g):
    return f.mul(g)


def inverse(f):
    return f.inverse()


def neg_log(f):
    return f.neg_log()


# ---------------------------------------------------------------------------
# univariate helpers (plain coefficient lists, usable at any m <= 24)
# ---------------------------------------------------------------------------

def poly_mul(a, b, trunc=None):
    n = len(a) + len(b) - 1 if trunc is None else min(trunc + 1, len(a) + len(b) - 1)
    out = [0] * n
    for i, x in enumerate(a):
        if x == 0 or i >= n:
            continue
        for j, y in enumerate(b):
            if i + j < n and y:
                out[i + j] += x * y
    return out


def poly_inverse(a, trunc):
    if not a or a[0] != 1:
        raise NonUnitConstantTermError("constant term must be 1")
    out = [0] * (trunc + 1)
    out[0] = 1
    for d in range(1, trunc + 1):
        s = 0
        for k in range(1, min(d, len(a) - 1) + 1):
            if a[k]:
                s += a[k] * out[d - k]
        out[d] = -s
    return out


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


# ---------------------------------------------------------------------------
# Poincare series of the loop homology algebras
# ---------------------------------------------------------------------------

def euler_denominator(K, trunc, chi=None):
    """The polynomial -sum_J chi~(K_J) x^J (constant term 1)."""
    chi = chi_subcomplexes(K) if chi is None else chi
    buckets = {}
    for J, c in enumerate(chi):
        d = J.bit_count()
        if c and d <= trunc:
            key = _pack(tuple((J >> i) & 1 for i in range(K.m)))
            buckets.setdefault(d, {})[key] = -c
    return MultiSeries(K.m, trunc, _buckets=buckets)


def poincare_ozk(K, trunc, chi=None):
    """Multigraded Poincare series of the loop homology of Z_K (flag case).

    Coefficient at alpha = dim of the (-|alpha|, 2 alpha) component.
    """
    if not is_flag(K):
        raise NotFlagError("Poincare series formula needs a flag complex")
    return euler_denominator(K, trunc, chi).inverse()


def poincare_ozk_t(K, trunc, chi=None):
    """The Z-graded specialization, as a coefficient list in t."""
    if not is_flag(K):
        raise NotFlagError("Poincare series formula needs a flag complex")
    chi = chi_subcomplexes(K) if chi is None else chi
    denom = [0] * (K.m + 1)
    for J, c in enumerate(chi):
        denom[J.bit_count()] -= c
    return poly_inverse(denom, trunc)


def poincare_odj(K, trunc, chi=None):
    """Series of the loop homology of the ambient polyhedral-product space.

    Equals the Z_K series times prod_i (1 + x_{e_i}); its coefficient at
    alpha counts the normal words with letter multiset alpha.
    """
    F = poincare_ozk(K, trunc, chi)
    zero = tuple([0] * K.m)
    for i in range(K.m):
        e = tuple(1 if j == i else 0 for j in range(K.m))
        F = F.mul(MultiSeries(K.m, trunc, {zero: 1, e: 1}))
    return F


def poincare_odj_t(K, trunc, chi=None):
    F = poincare_ozk_t(K, trunc, chi)
    for _ in range(K.m):
        F = poly_mul(F, [1, 1], trunc)
    return F


def panov_ray_check(K):
    """(1+t)^{m-n} sum h_i (-t)^i == -sum_J chi~(K_J) t^{|J|}, exactly.

    n = dim K + 1; returns (ok, lhs, rhs) as coefficient lists.
    """
    if not is_flag(K):
        raise NotFlagError("the h-vector identity is stated for flag complexes")
    fv = f_vector(K)
    n = K.dim + 1
    lhs = [comb(K.m - n, j) for j in range(K.m - n + 1)]
    hpoly = [h * (-1) ** i for i, h in enumerate(fv.h)]
    lhs = _trim(poly_mul(lhs, hpoly))
    chi = chi_subcomplexes(K)
    rhs = [0] * (K.m + 1)
    for J, c in enumerate(chi):
        rhs[J.bit_count()] -= c
    rhs = _trim(rhs)
    return lhs == rhs, lhs, rhs


# ---------------------------------------------------------------------------
# rational homotopy ranks
# ---------------------------------------------------------------------------

def moebius(n):
    if n == 1:
        return 1
    mu = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            mu = -mu
        d += 1
    if n > 1:
        mu = -mu
    return mu


def _log_series(K, trunc, chi=None):
    """w with sum_beta w_beta lambda^beta = -ln(-sum_J chi~(K_J)(-lambda)^J)."""
    chi = chi_subcomplexes(K) if chi is None else chi
    buckets = {}
    for J, c in enumerate(chi):
        d = J.bit_count()
        if c and d <= trunc:
            key = _pack(tuple((J >> i) & 1 for i in range(K.m)))
            buckets.setdefault(d, {})[key] = -c * (-1) ** d
    return MultiSeries(K.m, trunc, _buckets=buckets).neg_log()


def homotopy_ranks(K, trunc, chi=None):
    """Ranks of the rational homotopy of Z_K per halved multidegree.

    l_alpha = dim of pi in degree (-|alpha|, 2 alpha), recovered from the
    logarithm of the Poincare series by Moebius inversion over the
    common divisors of the coordinates.  Raises if a value fails to be a
    non-negative integer (which cannot happen for genuine flag input).
    """
    if not is_flag(K):
        raise NotFlagError("homotopy ranks are computed via the flag formula")
    w = _log_series(K, trunc, chi)
    candidates = set()
    for d, b in w._buckets.items():
        if d == 0:
            continue
        for key in b:
            k = 1
            while d * k <= trunc:
                candidates.add(_unpack(key * k, K.m))
                k += 1
    ranks = {}
    for alpha in sorted(candidates):
        g = 0
        for a in alpha:
            g = gcd(g, a)
        total = 0
        for k in range(1, g + 1):
            if g % k == 0:
                mu = moebius(k)
                if mu:
                    total += Fraction(mu, k) * w.coefficient(
                        tuple(a // k for a in alpha))
        val = total if sum(alpha) % 2 == 0 else -total
        if val:
            if val.denominator != 1 or val < 0:
                raise IntegralityViolationError(
                    f"rank at {alpha} is {val}; non-flag input smuggled in?")
            ranks[alpha] = int(val)
    return ranks


def pbw_reconstruct(ranks, nvars, trunc):
    """Rebuild the Poincare series from homotopy ranks.

    Each even-|alpha| generator contributes 1/(1-x^alpha)^l, each
    odd-|alpha| one contributes (1+x^alpha)^l; the result must equal the
    loop homology series.
    """
    acc = MultiSeries.one(nvars, trunc)
    # factors whose monomial exceeds half the truncation admit no
    # surviving cross-terms, so they fold into one polynomial 1 + sum(l x^a)
    tail = {0: {0: 1}}
    for alpha in sorted(ranks):
        l = ranks[alpha]
        if l < 0:
            raise ValueError("ranks must be non-negative")
        if l == 0:
            continue
        d = sum(alpha)
        if 2 * d > trunc:
            tail.setdefault(d, {})[_pack(alpha)] = l
            continue
        buckets = {}
        j = 0
        while j * d <= trunc:
            if d % 2 == 0:
                buckets[j * d] = {_pack(alpha) * j: comb(l - 1 + j, j)}
            elif j <= l:
                buckets[j * d] = {_pack(alpha) * j: comb(l, j)}
            j += 1
        acc = acc.mul(MultiSeries(nvars, trunc, _buckets=buckets))
    return acc.mul(MultiSeries(nvars, trunc, _buckets=tail))


def chi_inequality(K, alpha, chi=None):
    """Direct compositional value sum_N (1/N) sum over alpha = J_1+..+J_N.

    The J_i are nonempty vertex subsets summing to alpha coordinatewise;
    for gcd(alpha) = 1 this equals the homotopy rank at alpha, and it is
    non-negative for every flag complex.  Returns (value, value >= 0).
    """
    if not is_flag(K):
        raise NotFlagError("the inequality is stated for flag complexes")
    alpha = tuple(alpha)
    chi = chi_subcomplexes(K) if chi is None else chi
    supp = [i for i, a in enumerate(alpha) if a]
    subsets = []
    for S in range(1, 1 << len(supp)):
        mask = 0
        vec = [0] * K.m
        for pos, i in enumerate(supp):
            if (S >> pos) & 1:
                mask |= 1 << i
                vec[i] = 1
        if chi[mask]:
            subsets.append((tuple(vec), chi[mask]))
    memo = {}

    def tuples_count(rem, n):
        """Sum over ordered n-tuples of subsets summing to rem of prod chi."""
        if n == 0:
            return 1 if not any(rem) else 0
        if sum(rem) < n:
            return 0
        key = (rem, n)
        if key in memo:
            return memo[key]
        total = 0
        for vec, c in subsets:
            if all(v <= r for v, r in zip(vec, rem)):
                total += c * tuples_count(
                    tuple(r - v for r, v in zip(rem, vec)), n - 1)
        memo[key] = total
        return total

    value = Fraction(0)
    for n in range(1, sum(alpha) + 1):
        t = tuples_count(alpha, n)
        if t:
            value += Fraction(t, n)
    return value, value >= 0
