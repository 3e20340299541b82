"""Tutte polynomials of weight-at-most-2 matrices in q^(k+1)*poly(k) time.

A matrix whose columns have one or two nonzero entries is a multigraph on
the row set: weight-1 columns are loops, weight-2 columns are edges.  For
a connected spanning multigraph on a vertex set U the submatrix rank is
|U| or |U|-1, and the rank-deficient case happens exactly when all chosen
columns lie on a common hyperplane sum_v h(v) x_v = 0 whose coefficient
vector is supported on all of U.  The pipeline is:

  1. count spanning subgraphs of every vertex subset by component count
     and edge count (leveled disjoint-union convolution over the subset
     lattice, peeling one connected component at a time and dividing by
     the component count, which must be exact);
  2. the same count sieved by hyperplane: for every nonzero coefficient
     vector, restricted to the columns orthogonal to it, over the
     chain-product lattice on {0..q-1}^k (loops are never orthogonal, so
     this pass runs on the loopless multigraph; for q = 2 it coincides
     with pass 1 on the loopless multigraph and is shared);
  3. connected counts split into full-rank components and
     corank-1 components: aggregating the sieve by support overcounts
     each corank-1 component q-1 times (one per scalar multiple of h),
     so dividing by q-1 is exact;
  4. multisets of typed components assemble the rank-size table: rank of
     a subgraph is |V| minus the number of corank-1 components.

Counts are exact arbitrary-precision integers.  When a-priori magnitude
bounds fit machine words the hot arrays are int64 with products done
modulo a few 30-bit primes and reconstructed by CRT at every read point,
so all divisibility checks run on true integer values; otherwise the
same code runs on object-dtype arrays of Python ints.
"""

from math import comb

import numpy as np

from .errors import (
    InternalError,
    TooLargeError,
    WeightTooHighError,
    ZeroColumnError,
)
from .gf import is_prime
from .matroid import require_full_rank
from .tutte import RankSizeTable

CELL_GUARD = 1 << 26  # q^k * (k+1) * (m+1) memory guard


class Multigraph:
    """Multigraph view of a weight-<=2 matrix.

    loops: list of (vertex, coeff); edges: list of (u, v, cu, cv), u < v.
    """

    def __init__(self, ctx, k, m, loops, edges):
        self.ctx = ctx
        self.k = k
        self.m = m
        self.loops = loops
        self.edges = edges


def multigraph_of(mat):
    loops, edges = [], []
    for j in range(mat.m):
        nz = [(i, v) for i, v in enumerate(mat.col(j)) if v]
        if len(nz) == 0:
            raise ZeroColumnError("column %d is all-zero" % j)
        if len(nz) > 2:
            raise WeightTooHighError(
                "column %d has weight %d > 2" % (j, len(nz))
            )
        if len(nz) == 1:
            loops.append((nz[0][0], nz[0][1]))
        else:
            (u, cu), (v, cv) = nz
            edges.append((u, v, cu, cv))
    return Multigraph(mat.ctx, mat.k, mat.m, loops, edges)


# -- lattice helpers ----------------------------------------------------------


class _Lattice:
    """Mixed-radix chain-product lattice {0..radix-1}^k on numpy arrays.

    Index encoding: coordinate c contributes digit * radix^c.  For
    radix 2 this is the subset lattice with the usual bitmask encoding.
    """

    def __init__(self, radix, k):
        self.radix = radix
        self.k = k
        self.size = radix**k
        idx = np.arange(self.size, dtype=np.int64)
        self.digits = []
        weight = np.zeros(self.size, dtype=np.int64)
        support = np.zeros(self.size, dtype=np.int64)
        t = idx.copy()
        for c in range(k):
            dig = t % radix
            t //= radix
            nz = dig != 0
            weight += nz
            support |= nz.astype(np.int64) << c
            self.digits.append(dig)
        self.weight = weight
        self.support = support
        self.idx_by_weight = [
            np.flatnonzero(weight == w) for w in range(k + 1)
        ]

    def _axis_view(self, arr, c):
        r = self.radix
        return arr.reshape(self.size // r ** (c + 1), r, r**c)

    def zeta_ip(self, arr, mod=None):
        """Downset sums along every coordinate, in place."""
        r = self.radix
        for c in range(self.k):
            v = self._axis_view(arr, c)
            for t in range(1, r):
                v[:, t, :] += v[:, t - 1, :]
            if mod is not None:
                arr %= mod
        return arr

    def moebius_ip(self, arr, mod=None):
        """Inverse of zeta_ip, in place."""
        r = self.radix
        for c in range(self.k):
            v = self._axis_view(arr, c)
            for t in range(r - 1, 0, -1):
                v[:, t, :] -= v[:, t - 1, :]
            if mod is not None:
                arr %= mod
        return arr

    def transform_cost(self):
        return (self.radix - 1) * (self.size // self.radix) * self.k


def _primes_above(bound):
    """Distinct primes just below 2^30 whose product exceeds bound."""
    out, prod = [], 1
    c = (1 << 30) - 1
    while prod <= bound:
        while not is_prime(c):
            c -= 2
        out.append(c)
        prod *= c
        c -= 2
    return out


class _ModularArith:
    """int64 arrays; products per 30-bit prime, CRT at read points.

    Valid only when the true values read back are below the prime
    product and the zeta-domain slice entries fit in int64; both bounds
    are certified by the caller.
    """

    exact = False

    def __init__(self, true_bound):
        self.primes = _primes_above(4 * true_bound)
        if len(self.primes) >= 2:
            self.inv01 = pow(self.primes[0], -1, self.primes[1])
        self._int64_crt = len(self.primes) == 1 or (
            len(self.primes) == 2
            and self.primes[0] * self.primes[1] < 1 << 62
        )

    def zeros(self, size):
        return np.zeros(size, dtype=np.int64)

    def residues(self, arr):
        return [arr % p for p in self.primes]

    def new_acc(self, size):
        return [np.zeros(size, dtype=np.int64) for _ in self.primes]

    def mul_acc(self, acc, ra, rb):
        for i, p in enumerate(self.primes):
            acc[i] += (ra[i] * rb[i]) % p

    def extract(self, lat, acc, idx):
        parts = []
        for i, p in enumerate(self.primes):
            a = acc[i] % p
            lat.moebius_ip(a, mod=p)
            parts.append(a[idx])
        return self.crt(parts)

    def crt(self, parts):
        if len(self.primes) == 1:
            return parts[0]
        if self._int64_crt:
            t = ((parts[1] - parts[0]) * self.inv01) % self.primes[1]
            return parts[0] + self.primes[0] * t
        x = parts[0].astype(object)
        mod = self.primes[0]
        for r, p in zip(parts[1:], self.primes[1:]):
            t = ((r - x % p) * pow(mod % p, -1, p)) % p
            x = x + mod * t
            mod *= p
        return x

    def dot(self, a, b):
        """Exact inner product of two nonnegative value arrays."""
        parts = []
        for p in self.primes:
            prod = ((a % p) * (b % p)) % p
            parts.append(int(prod.sum() % p))
        if len(self.primes) == 1:
            return parts[0]
        x, mod = parts[0], self.primes[0]
        for r, p in zip(parts[1:], self.primes[1:]):
            t = ((r - x) * pow(mod % p, -1, p)) % p
            x += mod * t
            mod *= p
        return x


class _ExactArith:
    """object-dtype arrays of Python ints; always correct, no bounds."""

    exact = True

    def zeros(self, size):
        return np.zeros(size, dtype=object)

    def residues(self, arr):
        return arr

    def new_acc(self, size):
        return np.zeros(size, dtype=object)

    def mul_acc(self, acc, ra, rb):
        acc += ra * rb

    def extract(self, lat, acc, idx):
        a = acc.copy()
        lat.moebius_ip(a)
        return a[idx]

    def dot(self, a, b):
        return int(np.dot(a, b))


# -- the leveled component chain ----------------------------------------------


def _bump(counters, key, amount):
    if counters is not None:
        counters[key] = counters.get(key, 0) + amount


def _component_chain(
    lat,
    arith,
    m,
    counters,
    edges_avail=None,
    atoms=None,
    binom=None,
    per_d_out=None,
):
    """Count multisets of connected pieces partitioning each support.

    Either edges_avail is given (self-feeding mode: the single-piece
    counts at each level are binomial totals minus the multi-piece
    counts, which is the connected/disconnected split) or atoms is given
    (the single-piece counts per edge count, as full value arrays).

    Returns the merged single-piece value arrays (one per edge count).
    per_d_out, when a dict, receives merged value arrays per piece count.
    All multi-piece counts are divided by the piece count after peeling
    one piece; a nonzero remainder raises InternalError.
    """
    k = lat.k
    size = lat.size
    conn = [arith.zeros(size) for _ in range(m + 1)]
    zsl = {}  # (d, w) -> {s: zeta-domain value array}
    atom_res = {}  # (w, s) -> residues of the atom slice, reused heavily

    def note_per_d(d, s, idx, vals):
        if per_d_out is None:
            return
        if d not in per_d_out:
            per_d_out[d] = [arith.zeros(size) for _ in range(m + 1)]
        per_d_out[d][s][idx] = vals

    def store_slice(d, ell, s, idx, vals, last_level):
        if d == 1:
            conn[s][idx] = vals
        note_per_d(d, s, idx, vals)
        if last_level:
            return
        full = arith.zeros(size)
        full[idx] = vals
        lat.zeta_ip(full)
        _bump(counters, "transform_adds", lat.transform_cost())
        zsl.setdefault((d, ell), {})[s] = full
        if d == 1:
            atom_res[(ell, s)] = arith.residues(full)

    for ell in range(1, k + 1):
        idx = lat.idx_by_weight[ell]
        last_level = ell == k
        if edges_avail is not None:
            eav = edges_avail[idx]
            emax = int(eav.max()) if idx.size else 0
        else:
            emax = m

        # multi-piece counts first: peel one single piece off each multiset
        disc = {}
        for d in range(2, ell + 1):
            acc = {}
            for j in range(1, ell):
                a_side = zsl.get((1, j))
                b_side = zsl.get((d - 1, ell - j))
                if not a_side or not b_side:
                    continue
                b_res = {}
                for t2, zb in b_side.items():
                    b_res[t2] = arith.residues(zb)
                for t, _za in a_side.items():
                    ra = atom_res[(j, t)]
                    for t2, rb in b_res.items():
                        s = t + t2
                        if s > min(m, emax):
                            continue
                        if s not in acc:
                            acc[s] = arith.new_acc(size)
                        arith.mul_acc(acc[s], ra, rb)
                        _bump(counters, "entry_mults", size)
            for s in sorted(acc):
                vals = arith.extract(lat, acc[s], idx)
                _bump(counters, "transform_adds", lat.transform_cost())
                if np.any(vals % d):
                    raise InternalError(
                        "piece-count division by %d left a remainder" % d
                    )
                _bump(counters, "division_checks", int(idx.size))
                vals //= d
                if not np.any(vals):
                    continue
                disc[s] = disc.get(s, 0) + vals
                store_slice(d, ell, s, idx, vals, last_level)

        # single-piece counts at this level
        if atoms is not None:
            for s in range(m + 1):
                vals = atoms[s][idx]
                if not np.any(vals):
                    continue
                store_slice(1, ell, s, idx, vals, last_level)
        else:
            for s in range(ell - 1):
                # too few edges to connect ell vertices: totals must be
                # fully explained by multi-piece counts
                base = binom[eav, s]
                rest = disc.get(s, 0)
                if np.any(base - rest):
                    raise InternalError(
                        "component counts disagree with binomial totals"
                    )
            for s in range(max(0, ell - 1), min(m, emax) + 1):
                vals = binom[eav, s] - disc.get(s, 0)
                if np.any(vals < 0):
                    raise InternalError("negative connected count")
                if not np.any(vals):
                    continue
                store_slice(1, ell, s, idx, vals, last_level)

    return conn


# -- edge counting -------------------------------------------------------------


def _nonloop_counts(lat, mg):
    base = np.zeros(lat.size, dtype=np.int64)
    for (u, v, _cu, _cv) in mg.edges:
        base[(1 << u) | (1 << v)] += 1
    lat.zeta_ip(base)
    return base


def _loop_counts(lat, mg):
    base = np.zeros(lat.size, dtype=np.int64)
    for (v, _c) in mg.loops:
        base[1 << v] += 1
    lat.zeta_ip(base)
    return base


def _sieved_counts(vlat, mg):
    """For each coefficient vector h (lattice point), the number of edges
    with both endpoints in supp(h) that lie on the hyperplane of h.
    Loops never qualify: h(v) and the loop coefficient are both nonzero.
    """
    ctx = mg.ctx
    q = ctx.q
    cnt = np.zeros(vlat.size, dtype=np.int64)
    for (u, v, cu, cv) in mg.edges:
        du, dv = vlat.digits[u], vlat.digits[v]
        lhs = np.array([ctx.mul(h, cu) for h in range(q)], dtype=np.int64)[du]
        rhs = np.array(
            [ctx.neg(ctx.mul(h, cv)) for h in range(q)], dtype=np.int64
        )[dv]
        cnt += (du != 0) & (dv != 0) & (lhs == rhs)
    return cnt


def edge_counts(mat):
    """(edges inside U for every subset U, sieved edge counts for every
    coefficient vector) as plain lists; the first includes loops."""
    mg = multigraph_of(mat)
    slat = _Lattice(2, mat.k)
    all_cnt = _nonloop_counts(slat, mg) + _loop_counts(slat, mg)
    vlat = slat if mat.ctx.q == 2 else _Lattice(mat.ctx.q, mat.k)
    return [int(x) for x in all_cnt], [int(x) for x in _sieved_counts(vlat, mg)]


# -- main pipeline -------------------------------------------------------------


class WtTables:
    """Intermediate tables, exposed for cross-checking at small scale."""

    def __init__(self, k, m, q, spanning, sieved, conn_full_rank, conn_corank1):
        self.k = k
        self.m = m
        self.q = q
        self._spanning = spanning
        self._sieved = sieved
        self._bi = conn_full_rank
        self._bii = conn_corank1

    def spanning(self, d, s):
        """Spanning subgraph counts with d components and s edges, per
        vertex subset (loops included)."""
        arrs = self._spanning.get(d)
        if arrs is None:
            return [0] * (1 << self.k)
        return [int(x) for x in arrs[s]]

    def sieved(self, d, s):
        """Hyperplane-sieved counts per coefficient vector."""
        arrs = self._sieved.get(d)
        if arrs is None:
            return [0] * (self.q**self.k if self.q != 2 else 1 << self.k)
        return [int(x) for x in arrs[s]]

    def connected_full_rank(self, s):
        return [int(x) for x in self._bi[s]]

    def connected_corank1(self, s):
        return [int(x) for x in self._bii[s]]


def _binom_array(m, exact):
    if exact:
        tab = np.zeros((m + 1, m + 1), dtype=object)
        for n in range(m + 1):
            for s in range(m + 1):
                tab[n, s] = comb(n, s)
    else:
        tab = np.zeros((m + 1, m + 1), dtype=np.int64)
        for n in range(m + 1):
            for s in range(min(n, m) + 1):
                tab[n, s] = comb(n, s)
    return tab


def _wt2_pipeline(mat, counters, force_exact, keep_tables):
    mg = multigraph_of(mat)  # weight/zero-column validation first
    require_full_rank(mat)
    ctx = mat.ctx
    q, k, m = ctx.q, mat.k, mat.m
    if q**k * (k + 1) * (m + 1) > CELL_GUARD:
        raise TooLargeError(
            "q^k*(k+1)*(m+1) = %d exceeds the wt2 guard %d"
            % (q**k * (k + 1) * (m + 1), CELL_GUARD)
        )

    # magnitude certification for the int64 fast path
    true_bound = max(q - 1, 1) ** k * 2**m * (k + 1) * (m + 1)
    zeta_bound = q**k * 2**m * (k + 1)
    use_exact = (
        force_exact
        if force_exact is not None
        else max(true_bound, zeta_bound) >= 1 << 60
    )
    arith = _ExactArith() if use_exact else _ModularArith(true_bound)
    binom = _binom_array(m, use_exact)

    slat = _Lattice(2, k)
    nl_cnt = _nonloop_counts(slat, mg)
    loop_cnt = _loop_counts(slat, mg)

    per_d_subset = {} if keep_tables else None
    conn_nl = _component_chain(
        slat, arith, m, counters,
        edges_avail=nl_cnt, binom=binom, per_d_out=per_d_subset,
    )

    if q == 2:
        vlat = slat
        conn_h = conn_nl
        per_d_sieved = per_d_subset
    else:
        vlat = _Lattice(q, k)
        eh_cnt = _sieved_counts(vlat, mg)
        per_d_sieved = {} if keep_tables else None
        conn_h = _component_chain(
            vlat, arith, m, counters,
            edges_avail=eh_cnt, binom=binom, per_d_out=per_d_sieved,
        )

    # corank-1 connected counts: aggregate the sieve by support and strip
    # the scalar-multiple overcount
    ssize = slat.size
    bii = []
    for s in range(m + 1):
        pre = arith.zeros(ssize)
        np.add.at(pre, vlat.support, conn_h[s])
        if np.any(pre % (q - 1)):
            raise InternalError("scalar-multiple division left a remainder")
        _bump(counters, "division_checks", ssize)
        bii.append(pre // (q - 1))

    # full-rank connected counts: loop-mixed connected totals minus corank-1
    bi = []
    for s in range(m + 1):
        tot = arith.zeros(ssize)
        for j in range(s + 1):
            if not np.any(conn_nl[j]):
                continue
            tot += conn_nl[j] * binom[loop_cnt, s - j]
            _bump(counters, "entry_mults", ssize)
        v = tot - bii[s]
        if np.any(v < 0):
            raise InternalError("negative full-rank connected count")
        bi.append(v)

    # multisets of typed components; piece-count divisions stay exact
    per_d_bi, per_d_bii = {}, {}
    _component_chain(slat, arith, m, counters, atoms=bi, per_d_out=per_d_bi)
    _component_chain(slat, arith, m, counters, atoms=bii, per_d_out=per_d_bii)

    omega = [arith.zeros(ssize) for _ in range(m + 1)]
    omega[0][0] = 1  # zero full-rank components on the empty support
    for d_arrs in per_d_bi.values():
        for s in range(m + 1):
            omega[s] += d_arrs[s]

    # pair full-rank multisets on W with corank-1 multisets on V\W;
    # complements make the supports disjoint for free
    table = RankSizeTable(k, m)
    top = ssize - 1
    for dii in range(0, k + 1):
        r = k - dii
        if dii == 0:
            psi = None  # delta at the empty support, zero edges
        else:
            psi = per_d_bii.get(dii)
            if psi is None:
                continue
        for s in range(m + 1):
            total = 0
            for t in range(s + 1):
                if not np.any(omega[t]):
                    continue
                if psi is None:
                    if s - t == 0:
                        total += int(omega[t][top])
                    continue
                ps = psi[s - t]
                if not np.any(ps):
                    continue
                total += arith.dot(omega[t], ps[::-1])
                _bump(counters, "entry_mults", ssize)
            if total:
                table.tau[r][s] = int(total)

    tables = None
    if keep_tables:
        spanning = {}
        for d, arrs in (per_d_subset or {}).items():
            mixed = [arith.zeros(ssize) for _ in range(m + 1)]
            for s in range(m + 1):
                for j in range(s + 1):
                    if np.any(arrs[j]):
                        mixed[s] += arrs[j] * binom[loop_cnt, s - j]
            spanning[d] = mixed
        tables = WtTables(k, m, q, spanning, per_d_sieved or {}, bi, bii)
    return table, tables


def tutte_wt2(mat, counters=None, force_exact=None):
    """Rank-size table for a full-rank matrix with column weights in
    {1, 2}; zero columns and weight >= 3 are rejected."""
    table, _ = _wt2_pipeline(mat, counters, force_exact, keep_tables=False)
    return table


def wt2_tables(mat, counters=None, force_exact=None):
    """Same as tutte_wt2 but also returns the intermediate tables."""
    return _wt2_pipeline(mat, counters, force_exact, keep_tables=True)
