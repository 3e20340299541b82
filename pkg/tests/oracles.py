"""Independent reference implementations used as test oracles.

Everything here recomputes results by definition-level enumeration,
deliberately avoiding the code paths under test.
"""

from itertools import product

from fqtutte.gf import ctx_new
from fqtutte.matroid import rank
from fqtutte.tutte import RankSizeTable


def subsets(m):
    return range(1 << m)


def bits_of(mask):
    out = []
    j = 0
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return out


def tau_by_definition(mat):
    """Rank-size table with one fresh Gaussian elimination per subset."""
    table = RankSizeTable(mat.k, mat.m)
    for mask in subsets(mat.m):
        table.tau[rank(mat, mask)][bin(mask).count("1")] += 1
    return table


def poly_mul(a, b):
    out = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def poly_pow(base, e):
    out = {(0, 0): 1}
    for _ in range(e):
        out = poly_mul(out, base)
    return out


def tutte_by_definition(mat):
    """Monomial coefficients straight from the defining subset sum,
    multiplying out (x-1)^a (y-1)^b per subset."""
    xm1 = {(1, 0): 1, (0, 0): -1}
    ym1 = {(0, 1): 1, (0, 0): -1}
    acc = {}
    for mask in subsets(mat.m):
        r = rank(mat, mask)
        term = poly_mul(poly_pow(xm1, mat.k - r), poly_pow(ym1, bin(mask).count("1") - r))
        for key, c in term.items():
            acc[key] = acc.get(key, 0) + c
    return {k: v for k, v in acc.items() if v}


def components_of(vertices, edge_list):
    """Number of connected components of (vertices, edges); loops allowed."""
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in edge_list:
        if len(e) == 2:
            a, b = find(e[0]), find(e[1])
            if a != b:
                parent[a] = b
    return len({find(v) for v in vertices})


def multigraph_edges(mat):
    """Per column: tuple of incident vertices (1 for loops, 2 for edges)."""
    out = []
    for j in range(mat.m):
        nz = [i for i in range(mat.k) if mat.rows[i][j]]
        out.append(tuple(nz))
    return out


def spanning_counts_oracle(mat):
    """dict (U mask, d, s) -> number of subgraphs of the edges inside U
    with d components (isolated vertices count) and s edges."""
    edges = multigraph_edges(mat)
    out = {}
    for umask in subsets(mat.k):
        verts = bits_of(umask)
        inside = [j for j in range(mat.m) if all(v in verts for v in edges[j])]
        if not verts:
            continue
        for pick in subsets(len(inside)):
            chosen = [edges[inside[t]] for t in bits_of(pick)]
            d = components_of(verts, chosen)
            s = len(chosen)
            key = (umask, d, s)
            out[key] = out.get(key, 0) + 1
    return out


def sieved_edges(mat, hvec):
    """Columns with both endpoints in supp(h) lying on h's hyperplane."""
    ctx = mat.ctx
    edges = multigraph_edges(mat)
    supp = [v for v in range(mat.k) if hvec[v]]
    out = []
    for j, ends in enumerate(edges):
        if not ends or not all(v in supp for v in ends):
            continue
        acc = 0
        for v in ends:
            acc = ctx.add(acc, ctx.mul(hvec[v], mat.rows[v][j]))
        if acc == 0:
            out.append(j)
    return out


def all_h_vectors(q, k):
    return product(range(q), repeat=k)


def sieved_counts_oracle(mat):
    """dict (h tuple, d, s) -> subgraph counts restricted to the sieved
    edge set of h, on the support of h."""
    edges = multigraph_edges(mat)
    out = {}
    for hvec in all_h_vectors(mat.ctx.q, mat.k):
        verts = [v for v in range(mat.k) if hvec[v]]
        if not verts:
            continue
        inside = sieved_edges(mat, hvec)
        for pick in subsets(len(inside)):
            chosen = [edges[inside[t]] for t in bits_of(pick)]
            d = components_of(verts, chosen)
            s = len(chosen)
            key = (hvec, d, s)
            out[key] = out.get(key, 0) + 1
    return out


def connected_spanning_subgraphs(n, edge_pairs, n_edges=None):
    """Count edge subsets whose graph on all n vertices is connected;
    optionally restricted to a given edge count."""
    total = 0
    m = len(edge_pairs)
    for pick in subsets(m):
        chosen = [edge_pairs[t] for t in bits_of(pick)]
        if n_edges is not None and len(chosen) != n_edges:
            continue
        if components_of(range(n), chosen) == 1:
            total += 1
    return total


def least_generator_by_enumeration(mat, smask):
    """Size-lexicographically least subset of S with the rank of S, by
    scanning subsets in size-lex order."""
    r = rank(mat, smask)
    cols = bits_of(smask)
    best = None
    for size in range(r, len(cols) + 1):
        candidates = []
        for pick in subsets(len(cols)):
            if bin(pick).count("1") != size:
                continue
            mask = 0
            for t in bits_of(pick):
                mask |= 1 << cols[t]
            if rank(mat, mask) == r:
                candidates.append(mask)
        if candidates:
            # lexicographic on sorted index sequences = prefer smaller
            # minimum element of the symmetric difference
            best = min(candidates, key=lambda m_: sorted(bits_of(m_)))
            return best
    return best


def naive_full_support_tuples(mat, d):
    """Count d-tuples of message vectors with jointly full support."""
    ctx = mat.ctx
    q, k, m = ctx.q, mat.k, mat.m
    words = []
    for x in product(range(q), repeat=k):
        word = []
        for j in range(m):
            acc = 0
            for i in range(k):
                acc = ctx.add(acc, ctx.mul(x[i], mat.rows[i][j]))
            word.append(acc)
        words.append(word)
    full = 0
    for tup in product(words, repeat=d):
        if all(any(w[j] for w in tup) for j in range(m)):
            full += 1
    return full
