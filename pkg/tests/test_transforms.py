import random

import pytest

from fqtutte.errors import SizeMismatchError
from fqtutte.gf import is_prime
from fqtutte.transforms import (
    OpCounter,
    RankedTable,
    SubsetTable,
    VectorLatticeTable,
    join_product,
    join_product_ranked,
    lattice_weights,
    moebius_fq,
    moebius_subset,
    subset_convolve,
    zeta_fq,
    zeta_subset,
)


def naive_subset_convolve(f, g):
    n = f.n
    out = [0] * (1 << n)
    for u in range(1 << n):
        w = u
        while True:
            out[u] += f.vals[w] * g.vals[u ^ w]
            if w == 0:
                break
            w = (w - 1) & u
    return out


def _join(q, k, a, b):
    res, mul = 0, 1
    for _ in range(k):
        res += max(a % q, b % q) * mul
        a //= q
        b //= q
        mul *= q
    return res


def naive_join_product(f, g):
    q, k = f.q, f.k
    out = [0] * q**k
    for ia, va in enumerate(f.vals):
        if not va:
            continue
        for ib, vb in enumerate(g.vals):
            if vb:
                out[_join(q, k, ia, ib)] += va * vb
    return out


def naive_join_ranked(f, g, ell):
    q, k = f.q, f.k
    w = lattice_weights(q, k)
    out = [0] * q**k
    for j in range(ell + 1):
        for ia, va in enumerate(f.slices[j].vals):
            if not va:
                continue
            for ib, vb in enumerate(g.slices[ell - j].vals):
                if vb:
                    h = _join(q, k, ia, ib)
                    if w[h] == ell:
                        out[h] += va * vb
    return out


def prime_power_configs(limit):
    out = []
    for q in range(2, limit + 1):
        p = next(f for f in range(2, q + 1) if q % f == 0)
        t = q
        while t % p == 0:
            t //= p
        if t != 1 or not is_prime(p):
            continue
        k = 1
        while q**k <= limit:
            out.append((q, k))
            k += 1
    return out


def test_subset_convolve_identity():
    rnd = random.Random(0)
    g = SubsetTable(3, [rnd.randrange(10) for _ in range(8)])
    delta = SubsetTable(3)
    delta.vals[0] = 1
    assert subset_convolve(delta, g).vals == g.vals


def test_subset_convolve_all_ones():
    ones = SubsetTable(2, [1, 1, 1, 1])
    assert subset_convolve(ones, ones).vals == [1, 2, 2, 4]


def test_subset_convolve_vs_naive():
    rnd = random.Random(1)
    for n in range(0, 9):
        f = SubsetTable(n, [rnd.randrange(-4, 12) for _ in range(1 << n)])
        g = SubsetTable(n, [rnd.randrange(-4, 12) for _ in range(1 << n)])
        assert subset_convolve(f, g).vals == naive_subset_convolve(f, g)


def test_subset_convolve_commutative_associative():
    rnd = random.Random(2)
    n = 5
    f, g, h = (
        SubsetTable(n, [rnd.randrange(8) for _ in range(1 << n)]) for _ in range(3)
    )
    fg = subset_convolve(f, g)
    assert fg.vals == subset_convolve(g, f).vals
    assert (
        subset_convolve(fg, h).vals
        == subset_convolve(f, subset_convolve(g, h)).vals
    )


def test_subset_convolve_size_mismatch():
    with pytest.raises(SizeMismatchError):
        subset_convolve(SubsetTable(2), SubsetTable(3))


def test_zeta_subset_inverse():
    rnd = random.Random(3)
    vals = [rnd.randrange(-5, 30) for _ in range(64)]
    v = list(vals)
    zeta_subset(v, 6)
    moebius_subset(v, 6)
    assert v == vals


def test_zeta_fq_delta_at_zero():
    t = VectorLatticeTable(3, 3)
    t.vals[0] = 1
    assert zeta_fq(t).vals == [1] * 27


def test_zeta_moebius_fq_inverse():
    rnd = random.Random(4)
    for q, k in [(2, 5), (3, 4), (4, 3), (5, 3), (7, 2)]:
        t = VectorLatticeTable(q, k, [rnd.randrange(-9, 40) for _ in range(q**k)])
        assert moebius_fq(zeta_fq(t)).vals == t.vals


def test_zeta_fq_q2_equals_subset_zeta():
    rnd = random.Random(5)
    t = VectorLatticeTable(2, 7, [rnd.randrange(25) for _ in range(128)])
    subset_version = list(t.vals)
    zeta_subset(subset_version, 7)
    assert zeta_fq(t).vals == subset_version


def test_zeta_fq_operation_count_bound():
    for q, k in [(2, 6), (3, 4), (4, 3), (5, 3)]:
        counter = OpCounter()
        zeta_fq(VectorLatticeTable(q, k), counter)
        assert counter.adds <= q**k * k * q
        counter2 = OpCounter()
        moebius_fq(VectorLatticeTable(q, k), counter2)
        assert counter2.adds <= q**k * k * q


def test_join_product_ranked_delta_examples():
    # disjoint weight-1 supports join to their elementwise max
    a = VectorLatticeTable(3, 2)
    a.vals[2] = 1  # vector (2, 0)
    b = VectorLatticeTable(3, 2)
    b.vals[3] = 1  # vector (0, 1)
    out = join_product_ranked(
        RankedTable.from_table(a), RankedTable.from_table(b), 2
    )
    assert out.vals[2 + 3] == 1 and sum(out.vals) == 1
    # identical weight-1 supports never reach weight 2
    same = RankedTable.from_table(a)
    out2 = join_product_ranked(same, same, 2)
    assert all(v == 0 for v in out2.vals)


def test_join_product_ranked_vs_naive_all_small_lattices():
    rnd = random.Random(6)
    for q, k in prime_power_configs(2000):
        size = q**k
        density = 0.5 if size <= 200 else 0.1
        fa = VectorLatticeTable(
            q, k,
            [rnd.randrange(7) if rnd.random() < density else 0 for _ in range(size)],
        )
        ga = VectorLatticeTable(
            q, k,
            [rnd.randrange(7) if rnd.random() < density else 0 for _ in range(size)],
        )
        F, G = RankedTable.from_table(fa), RankedTable.from_table(ga)
        for ell in range(k + 1):
            assert join_product_ranked(F, G, ell).vals == naive_join_ranked(
                F, G, ell
            ), (q, k, ell)


def test_join_product_full_vs_naive():
    rnd = random.Random(7)
    for q, k in [(2, 5), (3, 3), (4, 3), (5, 2)]:
        fa = VectorLatticeTable(q, k, [rnd.randrange(5) for _ in range(q**k)])
        ga = VectorLatticeTable(q, k, [rnd.randrange(5) for _ in range(q**k)])
        assert join_product(fa, ga).vals == naive_join_product(fa, ga)


def test_lattice_table_guards():
    with pytest.raises(SizeMismatchError):
        VectorLatticeTable(3, 2, [0] * 8)
    with pytest.raises(SizeMismatchError):
        join_product(VectorLatticeTable(2, 3), VectorLatticeTable(3, 2))
