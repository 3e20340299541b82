"""Tutte polynomial data model and the definition-based oracle.

The canonical intermediate form shared by all algorithms is the
RankSizeTable: tau[r][s] counts the column subsets of rank r and size s.
Expanding sum_{r,s} tau[r][s] * (x-1)^(k-r) * (y-1)^(s-r) in exact
integer arithmetic gives the Tutte polynomial in the monomial basis, so
two algorithms agree iff their tables agree and their polynomial files
are byte-identical.

Polynomial text format: header 'tutte k m', then one line 'i j c' per
nonzero coefficient c of x^i y^j, sorted by (i, j).
"""

import threading
from math import comb

from .errors import ParseError, TooManyColumnsError
from .matroid import _reduce_col, require_full_rank

BRUTE_FORCE_MAX_COLUMNS = 24


class RankSizeTable:
    """Subset counts by (rank, size); entries are exact ints."""

    def __init__(self, k, m, tau=None):
        self.k = k
        self.m = m
        self.tau = (
            [[0] * (m + 1) for _ in range(k + 1)] if tau is None
            else [list(row) for row in tau]
        )
        assert len(self.tau) == k + 1
        assert all(len(row) == m + 1 for row in self.tau)

    def total(self):
        return sum(sum(row) for row in self.tau)

    def num_bases(self):
        return self.tau[self.k][self.k] if self.k <= self.m else 0

    def add_into(self, other):
        for r in range(self.k + 1):
            row, orow = self.tau[r], other.tau[r]
            for s in range(self.m + 1):
                row[s] += orow[s]

    def __eq__(self, other):
        return (
            isinstance(other, RankSizeTable)
            and (self.k, self.m, self.tau) == (other.k, other.m, other.tau)
        )

    def __repr__(self):
        return "RankSizeTable(k=%d, m=%d)" % (self.k, self.m)


class TuttePoly:
    """Tutte polynomial as a sparse map (i, j) -> coefficient of x^i y^j."""

    def __init__(self, coeff, k, m):
        self.coeff = {ij: c for ij, c in coeff.items() if c}
        self.k = k
        self.m = m
        for (i, j) in self.coeff:
            assert 0 <= i <= k and 0 <= j <= m, "degree outside (k, m) box"

    def evaluate(self, x0, y0):
        return sum(
            c * x0**i * y0**j for (i, j), c in self.coeff.items()
        )

    def assert_nonnegative(self):
        bad = {ij: c for ij, c in self.coeff.items() if c < 0}
        assert not bad, "negative Tutte coefficients (internal bug): %r" % bad

    def to_text(self):
        out = ["tutte %d %d" % (self.k, self.m)]
        for (i, j) in sorted(self.coeff):
            out.append("%d %d %d" % (i, j, self.coeff[(i, j)]))
        return "\n".join(out) + "\n"

    def __eq__(self, other):
        return isinstance(other, TuttePoly) and self.coeff == other.coeff

    def __repr__(self):
        terms = []
        for (i, j) in sorted(self.coeff, reverse=True):
            c = self.coeff[(i, j)]
            parts = []
            if i:
                parts.append("x" if i == 1 else "x^%d" % i)
            if j:
                parts.append("y" if j == 1 else "y^%d" % j)
            mono = "*".join(parts)
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-%s" % mono)
            else:
                terms.append("%d*%s" % (c, mono))
        return " + ".join(terms) if terms else "0"


def evaluate(tp, x0, y0):
    """Exact integer evaluation of a TuttePoly at integer (x0, y0)."""
    return tp.evaluate(x0, y0)


def poly_from_text(text):
    lines = [
        ln.strip() for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines or not lines[0].startswith("tutte "):
        raise ParseError("polynomial file must start with 'tutte k m'")
    head = lines[0].split()
    if len(head) != 3:
        raise ParseError("bad polynomial header: %s" % lines[0])
    k, m = int(head[1]), int(head[2])
    coeff = {}
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise ParseError("bad coefficient line: %s" % line)
        i, j, c = int(parts[0]), int(parts[1]), int(parts[2])
        coeff[(i, j)] = c
    return TuttePoly(coeff, k, m)


def tau_to_tutte(table):
    """Expand a rank-size table into monomial coefficients.

    No sign check happens here: synthetic tables may expand to negative
    coefficients.  Tables coming from an actual matroid should go through
    TuttePoly.assert_nonnegative afterwards.
    """
    k, m = table.k, table.m
    coeff = {}
    for r in range(k + 1):
        for s in range(m + 1):
            t = table.tau[r][s]
            if not t:
                continue
            a, b = k - r, s - r
            for i in range(a + 1):
                ca = comb(a, i) * (-1) ** (a - i)
                for j in range(b + 1):
                    cb = comb(b, j) * (-1) ** (b - j)
                    ij = (i, j)
                    coeff[ij] = coeff.get(ij, 0) + t * ca * cb
    return TuttePoly(coeff, k, m)


def _enumerate_range(ctx, cols, j0, basis, r, s, tau):
    """Count every extension of the current partial subset choice."""
    if j0 == len(cols):
        tau[r][s] += 1
        return
    _enumerate_range(ctx, cols, j0 + 1, basis, r, s, tau)
    red = _reduce_col(ctx, basis, cols[j0])
    if red is None:
        _enumerate_range(ctx, cols, j0 + 1, basis, r, s + 1, tau)
    else:
        _enumerate_range(ctx, cols, j0 + 1, basis + [red], r + 1, s + 1, tau)


def tutte_bruteforce(mat, threads=1):
    """Rank-size table straight from the definition: enumerate all 2^m
    column subsets and row-reduce each one (incrementally, sharing the
    elimination state along the enumeration tree).

    With threads > 1 the subset space is partitioned on the leading
    columns' inclusion patterns and partial tables are merged by
    addition; results are identical to the single-threaded run.
    """
    if mat.m > BRUTE_FORCE_MAX_COLUMNS:
        raise TooManyColumnsError(
            "m = %d exceeds brute-force bound %d"
            % (mat.m, BRUTE_FORCE_MAX_COLUMNS)
        )
    require_full_rank(mat)
    ctx = mat.ctx
    cols = mat.columns()
    table = RankSizeTable(mat.k, mat.m)

    if threads <= 1 or mat.m < 4:
        _enumerate_range(ctx, cols, 0, [], 0, 0, table.tau)
        return table

    split = 1
    while (1 << split) < min(2 * threads, 1 << (mat.m // 2)):
        split += 1
    seeds = []
    for pattern in range(1 << split):
        basis, r, s = [], 0, 0
        for j in range(split):
            if pattern >> j & 1:
                red = _reduce_col(ctx, basis, cols[j])
                s += 1
                if red is not None:
                    basis = basis + [red]
                    r += 1
        seeds.append((basis, r, s))

    partials = [RankSizeTable(mat.k, mat.m) for _ in range(threads)]

    def work(tid):
        for idx in range(tid, len(seeds), threads):
            basis, r, s = seeds[idx]
            _enumerate_range(ctx, cols, split, basis, r, s, partials[tid].tau)

    workers = [threading.Thread(target=work, args=(t,)) for t in range(threads)]
    for w in workers:
        w.start()
    for w in workers:
        w.join()
    for part in partials:
        table.add_into(part)
    return table
