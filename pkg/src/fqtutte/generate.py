"""Seeded random instance generators (deterministic per seed)."""

import random

from .errors import TooLargeError
from .gf import ctx_new
from .matroid import FqMatrix, from_graph, rank, restrict_to_row_basis

MAX_TRIES = 10000


def random_full_rank_matrix(p, d, k, m, seed):
    """Uniform k x m matrix over GF(p^d) conditioned on rank k, by
    rejection sampling."""
    assert m >= k
    ctx = ctx_new(p, d)
    rnd = random.Random("full:%d:%d:%d:%d:%d" % (p, d, k, m, seed))
    for _ in range(MAX_TRIES):
        rows = [[rnd.randrange(ctx.q) for _ in range(m)] for _ in range(k)]
        mat = FqMatrix(ctx, rows)
        if rank(mat) == k:
            return mat
    raise TooLargeError("no full-rank sample found (k=%d, m=%d)" % (k, m))


def random_wt2_matrix(p, d, k, m, seed, loop_prob=0.35):
    """Random matrix with column weights in {1, 2}, conditioned on
    rank k.  Over GF(2) full rank needs weight-1 columns (pure incidence
    columns always share the all-ones left kernel), hence the loop
    probability."""
    assert m >= k
    ctx = ctx_new(p, d)
    rnd = random.Random("wt2:%d:%d:%d:%d:%d" % (p, d, k, m, seed))
    for _ in range(MAX_TRIES):
        cols = []
        for _ in range(m):
            if k == 1 or rnd.random() < loop_prob:
                col = [0] * k
                col[rnd.randrange(k)] = rnd.randrange(1, ctx.q)
            else:
                u, v = rnd.sample(range(k), 2)
                col = [0] * k
                col[u] = rnd.randrange(1, ctx.q)
                col[v] = rnd.randrange(1, ctx.q)
            cols.append(col)
        mat = FqMatrix(ctx, [[cols[j][i] for j in range(m)] for i in range(k)])
        if rank(mat) == k:
            return mat
    raise TooLargeError("no full-rank wt2 sample found (k=%d, m=%d)" % (k, m))


def random_connected_graph(n_vertices, m, seed):
    """Connected simple graph: random spanning tree plus distinct extra
    edges."""
    assert m >= n_vertices - 1
    assert m <= n_vertices * (n_vertices - 1) // 2
    rnd = random.Random("graph:%d:%d:%d" % (n_vertices, m, seed))
    edges = []
    used = set()
    order = list(range(n_vertices))
    rnd.shuffle(order)
    for i in range(1, n_vertices):
        u = order[rnd.randrange(i)]
        v = order[i]
        e = (min(u, v), max(u, v))
        edges.append(e)
        used.add(e)
    while len(edges) < m:
        u, v = rnd.sample(range(n_vertices), 2)
        e = (min(u, v), max(u, v))
        if e not in used:
            used.add(e)
            edges.append(e)
    return edges


def graphic_matroid_matrix(k, m, seed):
    """Full-rank GF(2) representation of the cycle matroid of a random
    connected graph on k+1 vertices with m edges: the incidence matrix
    with one redundant row dropped (column weights stay <= 2)."""
    edges = random_connected_graph(k + 1, m, seed)
    mat = restrict_to_row_basis(from_graph(k + 1, edges))
    assert mat.k == k
    return mat
