"""Exact rank and Smith normal form for sparse integer matrices.

Everything runs on arbitrary-precision Python integers: ranks over Q are
computed by fraction-free elimination, ranks over F_p by modular
elimination (with a bitset fast path for p = 2), and torsion over Z via
the Smith normal form with minimal-absolute-value pivoting.  No floating
point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class NonPrimeModulusError(ValueError):
    """The modulus passed for an F_p computation is not prime."""


def is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def prime_power_factors(n):
    """Split n > 1 into its prime-power components, e.g. 12 -> (3, 4)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            q = 1
            while n % d == 0:
                n //= d
                q *= d
            out.append(q)
        d += 1
    if n > 1:
        out.append(n)
    return tuple(sorted(out))


@dataclass(frozen=True)
class SNFResult:
    """Invariant factors d_1 | d_2 | ... | d_r of an integer matrix."""

    diagonal: tuple

    @property
    def rank(self):
        return len(self.diagonal)

    def torsion(self):
        """Prime-power torsion coefficients (the parts of the d_i > 1)."""
        out = []
        for d in self.diagonal:
            if d > 1:
                out.extend(prime_power_factors(d))
        return tuple(sorted(out))

    def rank_mod(self, p):
        return sum(1 for d in self.diagonal if d % p)


@dataclass(frozen=True)
class ExactMatrix:
    """A sparse integer matrix given by its nonzero entries."""

    rows: int
    cols: int
    entries: tuple  # ((r, c, v), ...) with v != 0, positions unique

    @classmethod
    def from_triples(cls, rows, cols, triples):
        seen = set()
        ent = []
        for r, c, v in triples:
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValueError(f"entry ({r},{c}) out of range")
            if (r, c) in seen:
                raise ValueError(f"duplicate entry at ({r},{c})")
            seen.add((r, c))
            if v:
                ent.append((r, c, int(v)))
        return cls(rows, cols, tuple(sorted(ent)))

    @classmethod
    def from_columns(cls, rows, columns):
        """columns: iterable of [(row, value), ...] lists."""
        cols = list(columns)
        ent = []
        for c, col in enumerate(cols):
            for r, v in col:
                if v:
                    ent.append((r, c, int(v)))
        return cls(rows, len(cols), tuple(sorted(ent)))

    def column_dicts(self):
        cols = [dict() for _ in range(self.cols)]
        for r, c, v in self.entries:
            cols[c][r] = v
        return cols

    def transpose(self):
        return ExactMatrix(self.cols, self.rows,
                           tuple(sorted((c, r, v) for r, c, v in self.entries)))


# ---------------------------------------------------------------------------
# rank kernels
# ---------------------------------------------------------------------------

def rank_gf2_columns(columns):
    """Rank over F_2; each column is an int bitmask over row indices."""
    pivots = {}
    rank = 0
    for col in columns:
        while col:
            h = col.bit_length() - 1
            piv = pivots.get(h)
            if piv is None:
                pivots[h] = col
                rank += 1
                break
            col ^= piv
    return rank


def rank_mod_p_columns(columns, p):
    """Rank over F_p; each column is a dict row -> int."""
    pivots = {}
    rank = 0
    for col in columns:
        col = {r: v % p for r, v in col.items() if v % p}
        while col:
            r = max(col)
            piv = pivots.get(r)
            if piv is None:
                inv = pow(col[r], -1, p)
                pivots[r] = {rr: (vv * inv) % p for rr, vv in col.items()}
                rank += 1
                break
            c = col[r]
            new = dict(col)
            for rr, vv in piv.items():
                nv = (new.get(rr, 0) - c * vv) % p
                if nv:
                    new[rr] = nv
                else:
                    new.pop(rr, None)
            col = new
    return rank


def _content_reduce(col):
    g = 0
    for v in col.values():
        g = gcd(g, v)
        if g == 1:
            return col
    if g > 1:
        return {r: v // g for r, v in col.items()}
    return col


def rank_rational_columns(columns):
    """Rank over Q by fraction-free integer elimination.

    Each column is a dict row -> int.  Columns are combined with integer
    cross-multiplication and divided by their content, so values stay
    exact and reasonably small.
    """
    pivots = {}
    rank = 0
    for col in columns:
        col = {r: v for r, v in col.items() if v}
        while col:
            r = max(col)
            piv = pivots.get(r)
            if piv is None:
                pivots[r] = _content_reduce(col)
                rank += 1
                break
            a, b = piv[r], col[r]
            new = {}
            for rr in set(col) | set(piv):
                nv = col.get(rr, 0) * a - piv.get(rr, 0) * b
                if nv:
                    new[rr] = nv
            col = _content_reduce(new)
    return rank


def rank(matrix, p=None):
    """Rank of an ExactMatrix over Q (p=None) or over F_p."""
    if p is None:
        return rank_rational_columns(matrix.column_dicts())
    if not is_prime(p):
        raise NonPrimeModulusError(f"{p} is not prime")
    if p == 2:
        cols = [0] * matrix.cols
        for r, c, v in matrix.entries:
            if v % 2:
                cols[c] ^= 1 << r
        return rank_gf2_columns(cols)
    return rank_mod_p_columns(matrix.column_dicts(), p)


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def _snf_diagonal(rows):
    """Diagonalize a dict-of-dicts integer matrix {r: {c: v}} in place.

    Returns the list of nonzero diagonal values produced by the
    elimination (not yet normalized into a divisibility chain).
    """
    diag = []
    live = {r: dict(row) for r, row in rows.items() if row}
    while live:
        # minimal absolute value pivot, deterministic tie-break
        pr = pc = pv = None
        for r, row in live.items():
            for c, v in row.items():
                if pv is None or (abs(v), r, c) < (abs(pv), pr, pc):
                    pr, pc, pv = r, c, v
        while True:
            if live[pr][pc] < 0:
                live[pr] = {c: -v for c, v in live[pr].items()}
            pv = live[pr][pc]
            # clear the pivot column
            dirty = None
            for r, row in live.items():
                if r == pr or pc not in row:
                    continue
                q = row[pc] // pv
                if q:
                    prow = live[pr]
                    for c, v in prow.items():
                        nv = row.get(c, 0) - q * v
                        if nv:
                            row[c] = nv
                        else:
                            row.pop(c, None)
                if pc in row:
                    dirty = r  # remainder is smaller than |pv|
                    break
            if dirty is not None:
                pr = dirty
                continue
            # column is clean; clear the pivot row (touches row pr only)
            prow = live[pr]
            rem = None
            for c in list(prow):
                if c == pc:
                    continue
                q = prow[c] // pv
                prow[c] -= q * pv
                if prow[c] == 0:
                    del prow[c]
                elif rem is None:
                    rem = c
            if rem is not None:
                pc = rem
                continue
            break
        diag.append(abs(live[pr][pc]))
        del live[pr]
        for r in [r for r, row in live.items() if not row]:
            del live[r]
    return diag


def _divisibility_chain(diag):
    diag = [abs(d) for d in diag if d]
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                if diag[j] % diag[i]:
                    g = gcd(diag[i], diag[j])
                    diag[i], diag[j] = g, diag[i] * diag[j] // g
                    changed = True
    return tuple(sorted(diag))


def smith_normal_form(matrix):
    rows = {}
    for r, c, v in matrix.entries:
        rows.setdefault(r, {})[c] = v
    return SNFResult(_divisibility_chain(_snf_diagonal(rows)))


def snf_columns(columns):
    """Smith normal form from columns given as [(row, value), ...] lists."""
    rows = {}
    for c, col in enumerate(columns):
        for r, v in col:
            if v:
                rows.setdefault(r, {})[c] = v
    return SNFResult(_divisibility_chain(_snf_diagonal(rows)))
