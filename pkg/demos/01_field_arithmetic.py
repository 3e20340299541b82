"""Finite field contexts: deterministic construction, discrete logs,
and subfield embeddings.

Every element of GF(p^d) is an integer 0..q-1 whose base-p digits are
the coefficients of the polynomial representative, so matrices and file
formats stay plain integer grids.
"""

from fqtutte import ctx_new, embedding_map

print("== GF(4): the binary quadratic extension ==")
c4 = ctx_new(2, 2)
print("reduction polynomial coefficients (constant first):", c4.irr)
print("multiplication table:")
for a in range(4):
    print("   ", [c4.mul(a, b) for b in range(4)])
print("w * w =", c4.mul(2, 2), " (w^2 reduces to w + 1, encoded 3)")

print()
print("== GF(9): discrete logarithms ==")
c9 = ctx_new(3, 2)
print("generator:", c9.gamma)
for a in range(1, 9):
    e = c9.dlog(a)
    assert c9.gamma_pow(e) == a
    print("   %d = gamma^%d" % (a, e))

print()
print("== Embedding GF(4) into GF(16) ==")
c16 = ctx_new(2, 4)
table = embedding_map(c4, c16)
print("value map:", list(table))
a, b = 2, 3
print(
    "homomorphism spot check: emb(%d*%d) = %d = emb(%d)*emb(%d)"
    % (a, b, table[c4.mul(a, b)], a, b)
)
assert table[c4.mul(a, b)] == c16.mul(table[a], table[b])
assert table[c4.add(a, b)] == c16.add(table[a], table[b])
print("(the embedding map is verified on all pairs at construction)")
