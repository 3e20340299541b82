"""Tutte polynomial via independent-set enumeration.

Every column subset S decomposes uniquely as S = I u R where I is the
size-lexicographically least subset of S of full rank (an independent
set) and R is contained in the prefix-dependent set P(I): the columns
lying in the span of the strictly earlier elements of I.  Summing the
binomial counts of the residuals R over all independent sets I therefore
reproduces the rank-size table exactly, while only ever visiting
independent sets, of which there are at most sum_{l<=k} C(m, l).

The enumeration is depth-first over column indices, growing an
elimination basis along the path; the same column reductions decide both
independence (for extension) and prefix-dependence (for |P(I)|).
"""

from math import comb

from .matroid import _reduce_col, require_full_rank
from .tutte import RankSizeTable


def prefix_dependent_set(mat, indep_mask):
    """Bitmask of columns in the span of the strictly earlier elements of
    the given independent set (zero columns always qualify)."""
    ctx = mat.ctx
    basis = []
    out = 0
    for f in range(mat.m):
        red = _reduce_col(ctx, basis, mat.col(f))
        if indep_mask >> f & 1:
            assert red is not None, "column set is not independent"
            basis.append(red)
        elif red is None:
            out |= 1 << f
    return out


def least_generator(mat, subset_mask):
    """Size-lexicographically least subset of S with the same rank as S.

    Greedy by column index: scanning S left to right and keeping every
    rank-increasing column yields the lexicographically least basis of S,
    which is also size-lexicographically least among subsets of full
    rank.
    """
    ctx = mat.ctx
    basis = []
    out = 0
    for f in range(mat.m):
        if subset_mask >> f & 1:
            red = _reduce_col(ctx, basis, mat.col(f))
            if red is not None:
                basis.append(red)
                out |= 1 << f
    return out


def is_least_generator(mat, indep_mask):
    """True when no size-lexicographically lesser subset of the whole
    ground set spans the same column space.

    Decided by rebuilding the space greedily over all columns: scan E in
    index order and keep each column that lies in span(M[I]) and raises
    the rank of the part kept so far; the scan output is the least
    generator of the span, so I qualifies iff the scan returns I itself.
    """
    ctx = mat.ctx
    span_basis = []
    for f in range(mat.m):
        if indep_mask >> f & 1:
            red = _reduce_col(ctx, span_basis, mat.col(f))
            assert red is not None, "column set is not independent"
            span_basis.append(red)
    target_rank = len(span_basis)
    greedy = 0
    basis = []
    for f in range(mat.m):
        col = mat.col(f)
        if _reduce_col(ctx, span_basis, col) is not None:
            continue  # outside the span
        red = _reduce_col(ctx, basis, col)
        if red is not None:
            basis.append(red)
            greedy |= 1 << f
            if len(basis) == target_rank:
                break
    return greedy == indep_mask


def tutte_lexgen(mat, counters=None):
    """Rank-size table by depth-first enumeration of independent sets.

    At each independent set I with |I| = l and p = |P(I)|, the subsets
    S = I u R with R inside P(I) contribute C(p, j) to tau[l][l + j].
    """
    require_full_rank(mat)
    ctx = mat.ctx
    m = mat.m
    cols = mat.columns()
    table = RankSizeTable(mat.k, m)
    stats = {"independent_sets": 0, "column_reductions": 0}

    def visit(level, basis, start, p_prefix):
        stats["independent_sets"] += 1
        # Residual classification of the tail: a column is either in the
        # span of the current basis (then it is prefix-dependent for this
        # set and every extension past it) or a legal extension.
        tail = [_reduce_col(ctx, basis, cols[f]) for f in range(start, m)]
        stats["column_reductions"] += len(tail)
        p_total = p_prefix + sum(1 for r in tail if r is None)
        row = table.tau[level]
        for j in range(p_total + 1):
            row[level + j] += comb(p_total, j)
        p_running = p_prefix
        for off, red in enumerate(tail):
            if red is None:
                p_running += 1
            else:
                visit(level + 1, basis + [red], start + off + 1, p_running)

    visit(0, [], 0, 0)
    if counters is not None:
        counters.update(stats)
    return table
