"""Exact arithmetic in GF(p^d).

Elements are plain Python ints in 0..q-1.  The value encodes the
coefficient vector of a polynomial in the reduction quotient: writing
value = c_0 + c_1*p + ... + c_{d-1}*p^{d-1}, the element is
c_0 + c_1*w + ... + c_{d-1}*w^{d-1} modulo the chosen irreducible.
A consequence used throughout: embedding the prime subfield GF(p) into
GF(p^d) is the identity on the values 0..p-1.

The irreducible polynomial is the lexicographically least monic
irreducible of the right degree, and the multiplicative generator is the
least element of full order, so contexts are reproducible across runs.
"""

from functools import lru_cache

from .errors import CharMismatchError, NotPrimeError, TooLargeError

Q_LIMIT = 2**31
EAGER_LOG_LIMIT = 2**16


def is_prime(n):
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def prime_factors(n):
    """Distinct prime factors of n, by trial division."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _poly_mod(num, den, p):
    """Remainder of num / den over GF(p); polys are coefficient lists."""
    num = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p) if p > 2 else den[-1]
    while len(num) - 1 >= dd and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) - 1 < dd:
            break
        shift = len(num) - 1 - dd
        factor = (num[-1] * inv_lead) % p
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - factor * c) % p
    while num and num[-1] == 0:
        num.pop()
    return num


def _is_irreducible(coeffs, p):
    """Trial division by every monic polynomial of degree <= deg/2."""
    d = len(coeffs) - 1
    if d == 1:
        return True
    if coeffs[0] == 0:  # divisible by w
        return False
    for deg in range(1, d // 2 + 1):
        for low in range(p**deg):
            den = _digits(low, p, deg) + [1]
            if not _poly_mod(coeffs, den, p):
                return False
    return True


def _digits(value, p, d):
    out = []
    for _ in range(d):
        out.append(value % p)
        value //= p
    return out


def _value(digits, p):
    v = 0
    for c in reversed(digits):
        v = v * p + c
    return v


class FieldCtx:
    """Arithmetic context for GF(p^d); immutable after construction."""

    def __init__(self, p, d, irr):
        self.p = p
        self.d = d
        self.q = p**d
        self.irr = tuple(irr)
        # w^(d+i) mod irr for i = 0..d-2, as digit lists; used to fold the
        # high half of a product back below degree d.
        red = [[(-c) % p for c in irr[:d]]]
        for _ in range(d - 2):
            prev = red[-1]
            nxt = [0] + prev[:-1]
            top = prev[-1]
            if top:
                for i in range(d):
                    nxt[i] = (nxt[i] + top * red[0][i]) % p
            red.append(nxt)
        self._red = red
        self.gamma = self._find_generator()
        self._exp = None
        self._log = None
        if self.q <= EAGER_LOG_LIMIT:
            self._build_log_table()

    # -- core operations ---------------------------------------------------

    def add(self, a, b):
        if self.d == 1:
            return (a + b) % self.p
        p = self.p
        da, db = _digits(a, p, self.d), _digits(b, p, self.d)
        return _value([(x + y) % p for x, y in zip(da, db)], p)

    def sub(self, a, b):
        if self.d == 1:
            return (a - b) % self.p
        p = self.p
        da, db = _digits(a, p, self.d), _digits(b, p, self.d)
        return _value([(x - y) % p for x, y in zip(da, db)], p)

    def neg(self, a):
        if self.d == 1:
            return (-a) % self.p
        p = self.p
        return _value([(-x) % p for x in _digits(a, p, self.d)], p)

    def mul(self, a, b):
        if self.d == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        p, d = self.p, self.d
        da, db = _digits(a, p, d), _digits(b, p, d)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        low = [c % p for c in prod[:d]]
        for i, c in enumerate(prod[d:]):
            if c % p:
                rv = self._red[i]
                cc = c % p
                for t in range(d):
                    low[t] = (low[t] + cc * rv[t]) % p
        return _value(low, p)

    def pow(self, a, n):
        if a == 0:
            return 1 if n == 0 else 0
        n %= self.q - 1
        r = 1
        base = a
        while n:
            if n & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            n >>= 1
        return r

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(%d)" % self.q)
        if self._log is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def dlog(self, a):
        """Exponent e with gamma^e = a; raises ZeroDivisionError for a = 0."""
        if a == 0:
            raise ZeroDivisionError("discrete log of 0")
        if self._log is None:
            self._build_log_table()
        return self._log[a]

    def gamma_pow(self, e):
        if self._exp is not None:
            return self._exp[e % (self.q - 1)]
        return self.pow(self.gamma, e)

    def element_order(self, a):
        assert a != 0
        n = self.q - 1
        for r in prime_factors(n):
            while n % r == 0 and self.pow(a, n // r) == 1:
                n //= r
        return n

    # -- construction helpers ----------------------------------------------

    def _find_generator(self):
        if self.q == 2:
            return 1
        n = self.q - 1
        rs = prime_factors(n)
        for g in range(1, self.q):
            if all(self.pow(g, n // r) != 1 for r in rs):
                return g
        raise AssertionError("no generator found; irreducible is broken")

    def _build_log_table(self):
        exp = [0] * (self.q - 1)
        log = [0] * self.q
        x = 1
        for i in range(self.q - 1):
            exp[i] = x
            log[x] = i
            x = self.mul(x, self.gamma)
        assert x == 1, "generator order is not q-1"
        self._exp = exp
        self._log = log

    def __repr__(self):
        return "FieldCtx(p=%d, d=%d, irr=%s)" % (self.p, self.d, list(self.irr))

    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and (self.p, self.d, self.irr) == (other.p, other.d, other.irr)
        )

    def __hash__(self):
        return hash((self.p, self.d, self.irr))


@lru_cache(maxsize=None)
def ctx_new(p, d):
    """Context for GF(p^d) with deterministic irreducible and generator.

    The irreducible is the lexicographically least monic irreducible of
    degree d (by integer encoding of the low coefficients); for d = 1 the
    convention is irr = w and arithmetic is mod p.
    """
    if not is_prime(p):
        raise NotPrimeError("p = %d is not prime" % p)
    if d < 1:
        raise TooLargeError("extension degree must be >= 1")
    if p**d > Q_LIMIT:
        raise TooLargeError("q = %d^%d exceeds the 2^31 bound" % (p, d))
    if d == 1:
        return FieldCtx(p, 1, (0, 1))
    for low in range(p**d):
        coeffs = _digits(low, p, d) + [1]
        if _is_irreducible(coeffs, p):
            return FieldCtx(p, d, coeffs)
    raise AssertionError("no irreducible of degree %d over GF(%d)" % (d, p))


@lru_cache(maxsize=None)
def embedding_map(src, dst):
    """Value table for the least ring embedding GF(q) -> GF(q^t).

    Requires equal characteristic and src.d | dst.d.  The generator of the
    source is sent to the least root in the target of its minimal
    polynomial over GF(p); the rest of the map follows multiplicatively.
    The result is checked to be a field homomorphism on all pairs.
    """
    if src.p != dst.p:
        raise CharMismatchError("characteristics %d vs %d" % (src.p, dst.p))
    if dst.d % src.d != 0:
        raise CharMismatchError(
            "GF(%d) does not embed in GF(%d)" % (src.q, dst.q)
        )
    if src.d == dst.d:
        if src.irr != dst.irr:
            raise CharMismatchError("same degree but different reduction")
        return tuple(range(src.q))

    # Minimal polynomial of src.gamma over GF(p): product of (w - gamma^(p^i)).
    conjugates = []
    g = src.gamma
    for _ in range(src.d):
        conjugates.append(g)
        g = src.pow(g, src.p)
    minpoly = [1]
    for c in conjugates:
        nxt = [0] * (len(minpoly) + 1)
        for i, a in enumerate(minpoly):
            nxt[i + 1] = src.add(nxt[i + 1], a)
            nxt[i] = src.sub(nxt[i], src.mul(a, c))
        minpoly = nxt
    assert all(v < src.p for v in minpoly), "minimal polynomial not over GF(p)"

    # Roots live in the order-(q-1) subgroup of the target.
    step = (dst.q - 1) // (src.q - 1)
    root = None
    for t in range(src.q - 1):
        x = dst.gamma_pow(t * step)
        acc = 0
        for a in reversed(minpoly):
            acc = dst.add(dst.mul(acc, x), a)
        if acc == 0 and (root is None or x < root):
            root = x
    assert root is not None, "minimal polynomial has no root in the target"

    table = [0] * src.q
    sv, dv = 1, 1
    for _ in range(src.q - 1):
        table[sv] = dv
        sv = src.mul(sv, src.gamma)
        dv = dst.mul(dv, root)

    if src.q <= 256:
        pairs = ((a, b) for a in range(src.q) for b in range(src.q))
    else:
        rnd = __import__("random").Random(0xF9)
        pairs = (
            (rnd.randrange(src.q), rnd.randrange(src.q)) for _ in range(10000)
        )
    for a, b in pairs:
        assert table[src.add(a, b)] == dst.add(table[a], table[b])
        assert table[src.mul(a, b)] == dst.mul(table[a], table[b])
    return tuple(table)


def embed(a, src, dst):
    """Image of a source element under the canonical embedding."""
    return embedding_map(src, dst)[a]
