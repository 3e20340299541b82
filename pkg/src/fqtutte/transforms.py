"""Zeta/Moebius machinery over two lattices.

Subset lattice: tables indexed by bitmask over a ground set of size n;
subset convolution h(U) = sum_{W subseteq U} f(W) g(U\\W) runs in
2^n*poly(n) by the ranked-transform scheme (zeta per cardinality slice,
rank-respecting pointwise products, Moebius inversion).

Product-of-chains lattice: tables indexed by vectors in {0..q-1}^k under
the coordinatewise order with 0 minimal, encoded mixed-radix with
coordinate 0 least significant (index = sum_i v_i * q^i).  The zeta
transform is a running prefix sum along each coordinate and the Moebius
transform is the backward difference, so both cost at most q^k * k * q
additions.  The join of two vectors is the coordinatewise max; the
weight-l part of a join-product picks out exactly the pairs with
disjoint supports, because supp(f v g) = supp(f) u supp(g).

Entries are Python ints throughout, so results are exact at any size.
"""

from functools import lru_cache

from .errors import SizeMismatchError


class OpCounter:
    """Scalar-operation tally for instrumented runs."""

    __slots__ = ("adds", "mults")

    def __init__(self):
        self.adds = 0
        self.mults = 0

    def __repr__(self):
        return "OpCounter(adds=%d, mults=%d)" % (self.adds, self.mults)


# -- subset lattice ----------------------------------------------------------


class SubsetTable:
    """2^n integers indexed by subset bitmask."""

    def __init__(self, n, vals=None):
        self.n = n
        self.vals = [0] * (1 << n) if vals is None else list(vals)
        if len(self.vals) != 1 << n:
            raise SizeMismatchError("subset table needs exactly 2^n entries")

    def copy(self):
        return SubsetTable(self.n, self.vals)

    def __eq__(self, other):
        return (
            isinstance(other, SubsetTable)
            and (self.n, self.vals) == (other.n, other.vals)
        )


def zeta_subset(vals, n, counter=None):
    """In-place subset-sum transform: out(U) = sum_{W subseteq U} in(W)."""
    for c in range(n):
        bit = 1 << c
        for u in range(len(vals)):
            if u & bit:
                vals[u] += vals[u ^ bit]
    if counter is not None:
        counter.adds += n * (len(vals) // 2)
    return vals


def moebius_subset(vals, n, counter=None):
    """Inverse of zeta_subset, in place."""
    for c in range(n):
        bit = 1 << c
        for u in range(len(vals)):
            if u & bit:
                vals[u] -= vals[u ^ bit]
    if counter is not None:
        counter.adds += n * (len(vals) // 2)
    return vals


def subset_convolve(f, g, counter=None):
    """Disjoint-union convolution of two subset tables.

    h(U) = sum over W subseteq U of f(W) * g(U\\W), via cardinality-ranked
    zeta transforms, rankwise products, and one Moebius inversion per
    output rank.
    """
    if f.n != g.n:
        raise SizeMismatchError("tables on different ground sets")
    n = f.n
    size = 1 << n
    pop = [bin(u).count("1") for u in range(size)]

    def ranked_zeta(t):
        slices = []
        for i in range(n + 1):
            sl = [t.vals[u] if pop[u] == i else 0 for u in range(size)]
            zeta_subset(sl, n, counter)
            slices.append(sl)
        return slices

    zf, zg = ranked_zeta(f), ranked_zeta(g)
    out = [0] * size
    for r in range(n + 1):
        acc = [0] * size
        for i in range(r + 1):
            fi, gj = zf[i], zg[r - i]
            for u in range(size):
                acc[u] += fi[u] * gj[u]
        if counter is not None:
            counter.mults += (r + 1) * size
        moebius_subset(acc, n, counter)
        for u in range(size):
            if pop[u] == r:
                out[u] = acc[u]
    return SubsetTable(n, out)


# -- product-of-chains lattice ------------------------------------------------


@lru_cache(maxsize=None)
def lattice_weights(q, k):
    """Number of nonzero coordinates of each mixed-radix index."""
    weights = [0] * (q**k)
    for i in range(1, q**k):
        v, w = i, 0
        while v:
            if v % q:
                w += 1
            v //= q
        weights[i] = w
    return tuple(weights)


class VectorLatticeTable:
    """q^k integers indexed by mixed-radix encoding of a vector."""

    def __init__(self, q, k, vals=None):
        self.q = q
        self.k = k
        self.vals = [0] * (q**k) if vals is None else list(vals)
        if len(self.vals) != q**k:
            raise SizeMismatchError("lattice table needs exactly q^k entries")

    def copy(self):
        return VectorLatticeTable(self.q, self.k, self.vals)

    def weight_part(self, ell):
        w = lattice_weights(self.q, self.k)
        return VectorLatticeTable(
            self.q, self.k,
            [v if w[i] == ell else 0 for i, v in enumerate(self.vals)],
        )

    def __eq__(self, other):
        return (
            isinstance(other, VectorLatticeTable)
            and (self.q, self.k, self.vals) == (other.q, other.k, other.vals)
        )


def _check_same(f, g):
    if (f.q, f.k) != (g.q, g.k):
        raise SizeMismatchError("tables on different lattices")


def zeta_fq(table, counter=None):
    """Downset-sum transform on the chain-product lattice.

    out(h) = sum of in(g) over g coordinatewise <= h, computed as one
    running prefix sum per coordinate (at most q^k * k * q additions).
    """
    q, k, vals = table.q, table.k, list(table.vals)
    stride = 1
    for _ in range(k):
        jump = stride * q
        for base in range(0, len(vals), jump):
            for t in range(1, q):
                lo = base + t * stride
                for i in range(lo, lo + stride):
                    vals[i] += vals[i - stride]
        if counter is not None:
            counter.adds += (q - 1) * (len(vals) // q)
        stride = jump
    return VectorLatticeTable(q, k, vals)


def moebius_fq(table, counter=None):
    """Inverse of zeta_fq: backward difference per coordinate."""
    q, k, vals = table.q, table.k, list(table.vals)
    stride = 1
    for _ in range(k):
        jump = stride * q
        for base in range(0, len(vals), jump):
            for t in range(q - 1, 0, -1):
                lo = base + t * stride
                for i in range(lo, lo + stride):
                    vals[i] -= vals[i - stride]
        if counter is not None:
            counter.adds += (q - 1) * (len(vals) // q)
        stride = jump
    return VectorLatticeTable(q, k, vals)


class RankedTable:
    """One lattice table per weight 0..k; slice l is supported on the
    weight-l vectors."""

    def __init__(self, q, k, slices=None):
        self.q = q
        self.k = k
        if slices is None:
            slices = [VectorLatticeTable(q, k) for _ in range(k + 1)]
        self.slices = list(slices)
        assert len(self.slices) == k + 1

    @classmethod
    def from_table(cls, table):
        return cls(
            table.q, table.k,
            [table.weight_part(ell) for ell in range(table.k + 1)],
        )


def join_product_ranked(f, g, ell, counter=None):
    """Weight-ell part of the join-product restricted to complementary
    weight slices: sum_j [f]_j v [g]_{ell-j}, then keep weight ell.

    Join-products turn into pointwise products under zeta, so this is
    zeta per slice, one accumulation pass, one Moebius inversion, and a
    weight filter.  Only support-disjoint pairs survive the filter.
    """
    if (f.q, f.k) != (g.q, g.k):
        raise SizeMismatchError("ranked tables on different lattices")
    q, k = f.q, f.k
    size = q**k
    acc = [0] * size
    for j in range(ell + 1):
        zf = zeta_fq(f.slices[j], counter).vals
        zg = zeta_fq(g.slices[ell - j], counter).vals
        for i in range(size):
            acc[i] += zf[i] * zg[i]
        if counter is not None:
            counter.mults += size
    out = moebius_fq(VectorLatticeTable(q, k, acc), counter)
    w = lattice_weights(q, k)
    for i in range(size):
        if w[i] != ell:
            out.vals[i] = 0
    return out


def join_product(f, g, counter=None):
    """Full join-product of two lattice tables (all weights at once)."""
    _check_same(f, g)
    zf = zeta_fq(f, counter).vals
    zg = zeta_fq(g, counter).vals
    prod = [a * b for a, b in zip(zf, zg)]
    if counter is not None:
        counter.mults += len(prod)
    return moebius_fq(VectorLatticeTable(f.q, f.k, prod), counter)
