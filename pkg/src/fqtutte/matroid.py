"""Linear matroids as matrices over GF(q).

A matroid is a k x m matrix over a FieldCtx; points are the columns and
column subsets are int bitmasks (bit j = column j).  Rank is computed by
Gaussian elimination over the field.  Incidence matrices of graphs come
in over GF(2) via from_graph; note that a k-vertex incidence matrix never
has row rank k (the rows of each connected component sum to zero), so
callers that need a full-rank representation first pass the matrix
through restrict_to_row_basis, which drops redundant original rows and
preserves both the column matroid and the column weights.

Text formats (lines starting with '#' are ignored):

  matrix:  'p d k m' header, then k rows of m integers in 0..q-1
  graph:   'k m' header, then m lines 'u v' with 0-based vertex ids
"""

from .errors import ParseError, RankDeficientError
from .gf import ctx_new


class FqMatrix:
    """k x m matrix over a FieldCtx; rows are tuples of element values."""

    def __init__(self, ctx, rows, col_labels=None):
        rows = tuple(tuple(r) for r in rows)
        self.ctx = ctx
        self.k = len(rows)
        self.m = len(rows[0]) if rows else 0
        for r in rows:
            assert len(r) == self.m, "ragged rows"
            assert all(0 <= v < ctx.q for v in r), "entry out of range"
        self.rows = rows
        self.col_labels = list(col_labels) if col_labels else list(range(self.m))

    def col(self, j):
        return [self.rows[i][j] for i in range(self.k)]

    def columns(self):
        return [self.col(j) for j in range(self.m)]

    def __eq__(self, other):
        return (
            isinstance(other, FqMatrix)
            and self.ctx == other.ctx
            and self.rows == other.rows
        )

    def __repr__(self):
        return "FqMatrix(q=%d, k=%d, m=%d)" % (self.ctx.q, self.k, self.m)


def full_mask(m):
    return (1 << m) - 1


def mask_of(cols):
    mask = 0
    for j in cols:
        mask |= 1 << j
    return mask


def _reduce_col(ctx, basis, vec):
    """Reduce vec against a normalized elimination basis; returns the
    residual vector (None means vec is in the span)."""
    v = list(vec)
    for pivot, bvec in basis:
        c = v[pivot]
        if c:
            for i in range(len(v)):
                if bvec[i]:
                    v[i] = ctx.sub(v[i], ctx.mul(c, bvec[i]))
    for i, c in enumerate(v):
        if c:
            inv = ctx.inv(c)
            return i, [ctx.mul(inv, x) for x in v]
    return None


def rank(mat, cols=None):
    """GF(q) rank of the submatrix on the given column bitmask
    (all columns when cols is None)."""
    if cols is None:
        cols = full_mask(mat.m)
    ctx = mat.ctx
    basis = []
    j = 0
    rem = cols & full_mask(mat.m)
    while rem:
        if rem & 1:
            red = _reduce_col(ctx, basis, mat.col(j))
            if red is not None:
                basis.append(red)
                if len(basis) == mat.k:
                    break
        rem >>= 1
        j += 1
    return len(basis)


def max_col_weight(mat):
    """Largest number of nonzero entries over all columns (0 for m = 0)."""
    best = 0
    for j in range(mat.m):
        w = sum(1 for v in mat.col(j) if v)
        if w > best:
            best = w
    return best


def require_full_rank(mat):
    if rank(mat) != mat.k:
        raise RankDeficientError(
            "matrix rank %d < k = %d" % (rank(mat), mat.k)
        )


def from_graph(k, edges):
    """GF(2) incidence matrix of a graph on k vertices.

    Edge (u, v) with u != v becomes a column with ones at rows u and v; a
    loop (v, v) becomes an all-zero column (a matroid loop).
    """
    ctx = ctx_new(2, 1)
    rows = [[0] * len(edges) for _ in range(k)]
    for j, (u, v) in enumerate(edges):
        if not (0 <= u < k and 0 <= v < k):
            raise IndexError("edge (%d, %d) out of range for k=%d" % (u, v, k))
        if u != v:
            rows[u][j] = 1
            rows[v][j] = 1
    return FqMatrix(ctx, rows)


def restrict_to_row_basis(mat):
    """Submatrix on a row basis, keeping the original (unreduced) rows.

    Dropping rows that are linear combinations of the kept ones changes
    neither the column matroid nor any column weight, so the result is a
    full-rank representation of the same matroid.
    """
    ctx = mat.ctx
    basis = []
    keep = []
    for i in range(mat.k):
        red = _reduce_col(ctx, basis, mat.rows[i])
        if red is not None:
            basis.append(red)
            keep.append(i)
    return FqMatrix(ctx, [mat.rows[i] for i in keep], mat.col_labels)


# -- text formats ------------------------------------------------------------


def _data_lines(text):
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            yield line


def parse_matrix(text):
    lines = list(_data_lines(text))
    if not lines:
        raise ParseError("empty matrix file")
    head = lines[0].split()
    if len(head) != 4:
        raise ParseError("matrix header must be 'p d k m'")
    try:
        p, d, k, m = map(int, head)
    except ValueError as exc:
        raise ParseError("bad matrix header: %s" % lines[0]) from exc
    ctx = ctx_new(p, d)
    if len(lines) != 1 + k:
        raise ParseError("expected %d matrix rows, got %d" % (k, len(lines) - 1))
    rows = []
    for line in lines[1:]:
        vals = line.split()
        if len(vals) != m:
            raise ParseError("row with %d entries, expected %d" % (len(vals), m))
        try:
            row = [int(v) for v in vals]
        except ValueError as exc:
            raise ParseError("non-integer entry in row: %s" % line) from exc
        if any(not 0 <= v < ctx.q for v in row):
            raise ParseError("entry out of range 0..%d" % (ctx.q - 1))
        rows.append(row)
    return FqMatrix(ctx, rows)


def write_matrix(mat):
    out = ["%d %d %d %d" % (mat.ctx.p, mat.ctx.d, mat.k, mat.m)]
    for r in mat.rows:
        out.append(" ".join(str(v) for v in r))
    return "\n".join(out) + "\n"


def parse_graph(text):
    """Graph format to (k, edges); use from_graph for the matrix."""
    lines = list(_data_lines(text))
    if not lines:
        raise ParseError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError("graph header must be 'k m'")
    k, m = int(head[0]), int(head[1])
    if len(lines) != 1 + m:
        raise ParseError("expected %d edges, got %d" % (m, len(lines) - 1))
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("edge line must be 'u v': %s" % line)
        u, v = int(parts[0]), int(parts[1])
        if not (0 <= u < k and 0 <= v < k):
            raise ParseError("vertex out of range in edge: %s" % line)
        edges.append((u, v))
    return k, edges


def write_graph(k, edges):
    out = ["%d %d" % (k, len(edges))]
    for u, v in edges:
        out.append("%d %d" % (u, v))
    return "\n".join(out) + "\n"
