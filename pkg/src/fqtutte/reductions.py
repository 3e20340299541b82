"""Counting-preserving reductions from CSPs to full-support problems.

The chain runs: 3-CNF -> bipartite arity-2 CSP -> (optional variable
aggregation) -> arity-2 difference constraints over Z_M -> homogeneous
arity-2 inequations over GF(M+1) -> generator matrix whose full-support
vectors are exactly the satisfying assignments.  A parallel branch turns
a bipartite CSP into homogeneous sum-inequations of arity <= 3 (all
coefficients +-1), which embed into any field; its solution count equals
f * |SAT| where the normalizer f is the count of an auxiliary
distinctness subsystem and is recomputed per instance by exhaustive
counting.  Every transformer preserves an explicitly stated count
relation that tiny fixtures verify by exhaustive enumeration.

Exhaustive counting is backtracking over a static variable order
(most-constrained first by default), checking each constraint as soon as
its last variable is assigned; the count is exact and order-independent.
"""

from dataclasses import dataclass, field
from itertools import combinations, product

from .errors import (
    InhomogeneousError,
    ModulusTooSmallError,
    NoSidonSetError,
    NotBipartiteError,
    NotPrimeError,
    OrderMismatchError,
    ParseError,
    RankDeficientError,
    TooLargeError,
    UnusedVariableError,
)
from .gf import ctx_new, is_prime
from .matroid import FqMatrix, rank, restrict_to_row_basis

DEFAULT_GUARD_BITS = 22


# -- instance types ------------------------------------------------------------


class CspInstance:
    """Finite-domain CSP: explicit domains, constraints with permitted
    value tuples over distinct-variable supports."""

    def __init__(self, domains, constraints, sides=None):
        self.domains = [list(d) for d in domains]
        self.constraints = []
        for support, permitted in constraints:
            support = tuple(support)
            assert len(set(support)) == len(support), "support repeats a variable"
            assert all(0 <= j < len(self.domains) for j in support)
            permitted = frozenset(tuple(t) for t in permitted)
            for t in permitted:
                assert len(t) == len(support)
                for v, j in zip(t, support):
                    assert v in self.domains[j], "permitted tuple off-domain"
            self.constraints.append((support, permitted))
        self.sides = (
            (list(sides[0]), list(sides[1])) if sides is not None else None
        )

    @property
    def n_vars(self):
        return len(self.domains)

    def domain_product(self):
        prod = 1
        for d in self.domains:
            prod *= len(d)
        return prod


class InequationSystem:
    """Linear inequations sum_i a_i x_i != beta, over Z_M (modulus set)
    or GF(q) (ctx set).  Coefficients are stored as ring elements; sum
    systems additionally carry their +-1 signing so they can be recast
    over any field."""

    def __init__(self, n, constraints, modulus=None, ctx=None, signed=None,
                 meta=None):
        assert (modulus is None) != (ctx is None), "need exactly one of modulus/ctx"
        self.n = n
        self.modulus = modulus
        self.ctx = ctx
        self.constraints = []
        ring = modulus if modulus is not None else ctx.q
        for coeffs, beta in constraints:
            coeffs = dict(coeffs)
            assert coeffs, "inequation without variables"
            assert all(0 <= j < n for j in coeffs)
            assert all(0 < c < ring for c in coeffs.values()), "zero or out-of-range coefficient"
            assert 0 <= beta < ring
            self.constraints.append((coeffs, beta))
        self.signed = signed  # list of dicts idx -> +-1, aligned with constraints
        self.meta = dict(meta) if meta else {}

    @property
    def n_constraints(self):
        return len(self.constraints)

    def is_homogeneous(self):
        return all(beta == 0 for _, beta in self.constraints)

    def arity(self):
        return max((len(c) for c, _ in self.constraints), default=0)

    def domain_product(self):
        ring = self.modulus if self.modulus is not None else self.ctx.q
        return ring**self.n


# -- exhaustive counting --------------------------------------------------------


def _backtrack_count(domains, checks_by_pos, order):
    """Count assignments surviving all checks; checks_by_pos[p] holds
    predicates over the partial assignment that become decidable once
    position p is assigned."""
    n = len(order)
    assign = [None] * len(domains)

    def go(pos):
        if pos == n:
            return 1
        var = order[pos]
        total = 0
        for val in domains[var]:
            assign[var] = val
            if all(chk(assign) for chk in checks_by_pos[pos]):
                total += go(pos + 1)
        assign[var] = None
        return total

    return go(0)


def _static_order(n_vars, supports):
    degree = [0] * n_vars
    for sup in supports:
        for j in sup:
            degree[j] += 1
    return sorted(range(n_vars), key=lambda j: -degree[j])


def count_sat(inst, guard_bits=DEFAULT_GUARD_BITS, order=None):
    """Exact number of satisfying assignments, by backtracking search.

    Guarded by the total domain product (default 2^22); pass a larger
    guard_bits explicitly for heavier fixtures.
    """
    if inst.domain_product() > 1 << guard_bits:
        raise TooLargeError(
            "domain product exceeds 2^%d guard" % guard_bits
        )
    if isinstance(inst, CspInstance):
        domains = inst.domains
        raw = [
            (sup, (lambda s, p: lambda a: tuple(a[j] for j in s) in p)(sup, perm))
            for sup, perm in inst.constraints
        ]
    else:
        if inst.modulus is not None:
            ring = inst.modulus
            domains = [range(ring)] * inst.n

            def make_check(items, beta):
                return lambda a: sum(c * a[j] for j, c in items) % ring != beta

        else:
            ctx = inst.ctx
            domains = [range(ctx.q)] * inst.n

            def make_check(items, beta):
                def chk(a):
                    acc = 0
                    for j, c in items:
                        acc = ctx.add(acc, ctx.mul(c, a[j]))
                    return acc != beta

                return chk

        raw = [
            (tuple(coeffs), make_check(sorted(coeffs.items()), beta))
            for coeffs, beta in inst.constraints
        ]

    if order is None:
        order = _static_order(len(domains), [sup for sup, _ in raw])
    else:
        order = list(order)
        assert sorted(order) == list(range(len(domains)))
    pos_of = {var: p for p, var in enumerate(order)}
    checks_by_pos = [[] for _ in order]
    for sup, chk in raw:
        checks_by_pos[max(pos_of[j] for j in sup)].append(chk)
    return _backtrack_count(domains, checks_by_pos, order)


# -- CNF ------------------------------------------------------------------------


def parse_dimacs(text):
    """DIMACS-like CNF: 'p cnf v m' header, clause lines ending in 0,
    'c' comment lines ignored. Returns (n_vars, clauses as literal lists)."""
    n_vars = None
    n_clauses = None
    clauses = []
    pending = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("#"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("bad DIMACS header: %s" % line)
            n_vars, n_clauses = int(parts[2]), int(parts[3])
            continue
        if n_vars is None:
            raise ParseError("clause before 'p cnf' header")
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(pending)
                pending = []
            else:
                if not 1 <= abs(lit) <= n_vars:
                    raise ParseError("literal %d out of range" % lit)
                pending.append(lit)
    if pending:
        raise ParseError("last clause not 0-terminated")
    if n_clauses is not None and len(clauses) != n_clauses:
        raise ParseError(
            "header claims %d clauses, found %d" % (n_clauses, len(clauses))
        )
    return n_vars, clauses


def count_sat_cnf(n_vars, clauses):
    """Model count of a CNF by direct enumeration (tiny inputs only)."""
    if n_vars > DEFAULT_GUARD_BITS:
        raise TooLargeError("too many CNF variables for enumeration")
    total = 0
    for bits in range(1 << n_vars):
        ok = True
        for cl in clauses:
            if not any(
                (bits >> (abs(l) - 1) & 1) == (1 if l > 0 else 0) for l in cl
            ):
                ok = False
                break
        if ok:
            total += 1
    return total


def cnf_to_bipartite_csp(n_vars, clauses):
    """Clause-variable incidence CSP: one variable per clause holding a
    satisfying tuple, one per original variable, equality-projection
    constraints between them.  Model counts coincide.
    """
    occurs = [False] * n_vars
    for cl in clauses:
        for lit in cl:
            occurs[abs(lit) - 1] = True
    missing = [i + 1 for i, used in enumerate(occurs) if not used]
    if missing:
        raise UnusedVariableError(
            "variables in no clause: %s" % missing
        )

    domains = [[0, 1] for _ in range(n_vars)]
    constraints = []
    clause_vars = []
    for cl in clauses:
        support_vars = sorted(set(abs(l) - 1 for l in cl))
        falsifying = set()
        for t in product([0, 1], repeat=len(support_vars)):
            val = {v: b for v, b in zip(support_vars, t)}
            if not any(
                val[abs(l) - 1] == (1 if l > 0 else 0) for l in cl
            ):
                falsifying.add(t)
        permitted = [
            t
            for t in product([0, 1], repeat=len(support_vars))
            if t not in falsifying
        ]
        cvar = len(domains)
        domains.append(list(permitted))
        clause_vars.append(cvar)
        for pos, v in enumerate(support_vars):
            pairs = {(t[pos], t) for t in permitted}
            constraints.append(((v, cvar), pairs))
    return CspInstance(
        domains,
        constraints,
        sides=(list(range(n_vars)), clause_vars),
    )


# -- bipartite plumbing ----------------------------------------------------------


def _normalized_bipartite(inst):
    """Constraint supports reordered as (left var, right var); rejects
    instances without a bipartition or with same-side constraints."""
    if inst.sides is None:
        raise NotBipartiteError("instance carries no bipartition")
    left, right = inst.sides
    lset, rset = set(left), set(right)
    if lset & rset or len(lset) + len(rset) != inst.n_vars:
        raise NotBipartiteError("sides are not a partition of the variables")
    constraints = []
    for sup, perm in inst.constraints:
        if len(sup) != 2:
            raise NotBipartiteError("arity-%d constraint" % len(sup))
        a, b = sup
        if a in lset and b in rset:
            constraints.append(((a, b), perm))
        elif a in rset and b in lset:
            constraints.append(((b, a), {(y, x) for (x, y) in perm}))
        else:
            raise NotBipartiteError("constraint within one side")
    return left, right, constraints


def _pad_sides(domains, left, right, constraints, multiple=1):
    """Append fresh singleton-domain variables until both sides have the
    same length, a multiple of `multiple`."""
    domains = [list(d) for d in domains]
    left, right = list(left), list(right)
    target = max(len(left), len(right))
    target = -(-target // multiple) * multiple if multiple > 1 else target
    while len(left) < target:
        left.append(len(domains))
        domains.append([0])
    while len(right) < target:
        right.append(len(domains))
        domains.append([0])
    return domains, left, right, constraints


def aggregate_vars(inst, g):
    """Group each side's variables g at a time; grouped domains are value
    tuples and constraints are extended to act on the right coordinates.
    Model counts coincide (padding variables have singleton domains).
    """
    assert g >= 1
    left, right, constraints = _normalized_bipartite(inst)
    domains, left, right, constraints = _pad_sides(
        inst.domains, left, right, constraints, multiple=g
    )
    groups = []
    owner = {}
    for side in (left, right):
        for i in range(0, len(side), g):
            members = side[i:i + g]
            gid = len(groups)
            groups.append(members)
            for pos, v in enumerate(members):
                owner[v] = (gid, pos)
    new_domains = [
        [tuple(t) for t in product(*(domains[v] for v in members))]
        for members in groups
    ]
    n_left_groups = len(left) // g
    new_constraints = []
    for (a, b), perm in constraints:
        ga, pa = owner[a]
        gb, pb = owner[b]
        pairs = {
            (ta, tb)
            for ta in new_domains[ga]
            for tb in new_domains[gb]
            if (ta[pa], tb[pb]) in perm
        }
        new_constraints.append(((ga, gb), pairs))
    return CspInstance(
        new_domains,
        new_constraints,
        sides=(list(range(n_left_groups)), list(range(n_left_groups, len(groups)))),
    )


# -- difference constraints over Z_M ---------------------------------------------


def csp_to_special_modular(inst, modulus):
    """Bipartite CSP to arity-2 difference inequations over Z_M.

    Variables: x_1..x_n (left), y_1..y_n (right), one anchor z.  Left
    domains relabel injectively into {d, 2d, .., d^2}, right domains into
    {0, .., d-1}; differences x - y then decode the pair uniquely, and
    every solution of the derived system is a solution of the CSP shifted
    by an arbitrary z, so the count comes out multiplied by exactly M.
    """
    left, right, constraints = _normalized_bipartite(inst)
    domains, left, right, constraints = _pad_sides(
        inst.domains, left, right, constraints
    )
    n = len(left)
    d = max(len(dom) for dom in domains)
    if modulus < max(3 * n, d * d + 1):
        raise ModulusTooSmallError(
            "modulus %d below max(3n, d^2+1) = %d"
            % (modulus, max(3 * n, d * d + 1))
        )
    M = modulus

    xpos = {v: i for i, v in enumerate(left)}
    ypos = {v: n + j for j, v in enumerate(right)}
    z = 2 * n
    # relabeling: left value with domain index t -> (t+1)*d, right -> t
    relab = {}
    for v in left:
        relab[v] = {val: (t + 1) * d for t, val in enumerate(domains[v])}
    for v in right:
        relab[v] = {val: t for t, val in enumerate(domains[v])}

    cons = []
    kinds = []
    for v in left:
        allowed = set(relab[v].values())
        for c in range(M):
            if c not in allowed:
                cons.append(({xpos[v]: 1, z: M - 1}, c))
                kinds.append("x-z")
    for v in right:
        allowed = set(relab[v].values())
        for c in range(M):
            if c not in allowed:
                cons.append(({ypos[v]: 1, z: M - 1}, c))
                kinds.append("y-z")
    for (a, b), perm in constraints:
        allowed_diff = {
            (relab[a][va] - relab[b][vb]) % M for (va, vb) in perm
        }
        for c in range(M):
            if c not in allowed_diff:
                cons.append(({xpos[a]: 1, ypos[b]: M - 1}, c))
                kinds.append("x-y")
    return InequationSystem(
        2 * n + 1,
        cons,
        modulus=M,
        meta={
            "kind": "special-modular",
            "n_pairs": n,
            "count_factor": M,
            "relabel": {v: dict(mp) for v, mp in relab.items()},
            "constraint_kinds": kinds,
        },
    )


def modular_to_homogeneous(sys_mod, ctx):
    """Difference inequations over Z_{q-1} to homogeneous arity-<=2
    inequations over GF(q): values map to generator powers, so each
    u - v != c becomes u' - gamma^c v' != 0, plus one nonzero-ness
    inequation per variable.  Counts are preserved exactly.
    """
    if sys_mod.modulus is None:
        raise OrderMismatchError("input system must be modular")
    if ctx.q - 1 != sys_mod.modulus:
        raise OrderMismatchError(
            "field order %d does not extend modulus %d"
            % (ctx.q, sys_mod.modulus)
        )
    M = sys_mod.modulus
    cons = [({j: 1}, 0) for j in range(sys_mod.n)]
    for coeffs, c in sys_mod.constraints:
        items = sorted(coeffs.items())
        if len(items) != 2 or {v for _, v in items} != {1, M - 1}:
            raise OrderMismatchError(
                "constraint is not a difference inequation: %r" % (coeffs,)
            )
        (a, ca), (b, cb) = items
        if ca == M - 1:
            a, b = b, a
        cons.append(({a: 1, b: ctx.neg(ctx.gamma_pow(c))}, 0))
    return InequationSystem(
        sys_mod.n,
        cons,
        ctx=ctx,
        meta={"kind": "homogeneous-arity2", "count_factor": 1},
    )


# -- Sidon sets -------------------------------------------------------------------


def is_sidon(ctx, elems):
    """Four-tuple check of the defining condition: among any x,y,z,w with
    at least three distinct values, x+y != z+w."""
    elems = list(elems)
    for x, y, z, w in product(elems, repeat=4):
        if len({x, y, z, w}) >= 3 and ctx.add(x, y) == ctx.add(z, w):
            return False
    return True


def _pair_sums_ok(ctx, elems):
    """No two distinct unordered pairs covering >= 3 distinct elements
    share a sum; equivalent to the four-tuple condition."""
    by_sum = {}
    for i, a in enumerate(elems):
        for b in elems[i:]:
            by_sum.setdefault(ctx.add(a, b), []).append(frozenset((a, b)))
    for pairs in by_sum.values():
        for p1, p2 in combinations(pairs, 2):
            if len(p1 | p2) >= 3:
                return False
    return True


def find_sidon(ctx, size):
    """A Sidon set of the requested size in the additive group of the
    field, by backtracking over ascending element values; returns None
    when the search space is exhausted."""
    if size <= 0:
        return []
    if size > ctx.q:
        return None

    def extend(chosen, start):
        if len(chosen) == size:
            return list(chosen)
        for cand in range(start, ctx.q):
            chosen.append(cand)
            if _pair_sums_ok(ctx, chosen):
                got = extend(chosen, cand + 1)
                if got is not None:
                    return got
            chosen.pop()
        return None

    found = extend([], 0)
    if found is not None:
        assert is_sidon(ctx, found)
    return found


# -- sum-inequations of arity <= 3 -------------------------------------------------


@dataclass
class SumReduction:
    system: InequationSystem
    subsystem: InequationSystem  # distinctness core whose count is the normalizer
    n_pairs: int
    domain_size: int
    sidon: list = field(default_factory=list)


def csp_to_sum_inequations(inst, ctx):
    """Bipartite CSP to homogeneous sum-inequations of arity <= 3 over
    the given field.

    Auxiliary variables pin down a labelled copy of the whole field
    (blocks s, t, r, all distinct; block v, all distinct) with
    s_a + t_b = v_{g(a,b)} forced through inequations; the left/right CSP
    variables are then confined to the s/t blocks and original
    constraints act through the v block.  The solution count is the CSP
    count times the number of solutions of the (s,t,r,v)-core, and a
    Sidon set of size twice the domain bound witnesses that the core is
    satisfiable at all.
    """
    q = ctx.q
    left, right, constraints = _normalized_bipartite(inst)
    domains, left, right, constraints = _pad_sides(
        inst.domains, left, right, constraints
    )
    n = len(left)
    d = max(len(dom) for dom in domains)
    sidon = find_sidon(ctx, 2 * d)
    if sidon is None:
        raise NoSidonSetError(
            "no Sidon set of size %d in the additive group of GF(%d)"
            % (2 * d, q)
        )
    assert d * d <= q, "Sidon existence implies d^2 <= q"
    if q < 2 * d:
        raise NoSidonSetError("field too small for 2d distinct anchors")

    # variable layout
    xpos = {v: i for i, v in enumerate(left)}
    ypos = {v: n + j for j, v in enumerate(right)}
    s0 = 2 * n
    t0 = s0 + d
    r0 = t0 + d
    v0 = r0 + (q - 2 * d)
    n_all = v0 + q
    assert n_all == 2 * (n + q)

    # relabel domains into {1..d}: value with domain index t -> t+1
    relab = {
        v: {val: t + 1 for t, val in enumerate(domains[v])}
        for v in left + right
    }

    def g_of(a, b):
        return (a - 1) * d + b  # in 1..d^2 <= q

    neg1 = ctx.neg(1)
    core = []
    anchors = list(range(s0, r0)) + list(range(r0, v0))
    for u, w in combinations(anchors, 2):
        core.append(({u: 1, w: neg1}, 0))  # type (i)
    for u, w in combinations(range(v0, v0 + q), 2):
        core.append(({u: 1, w: neg1}, 0))  # type (ii)
    for a in range(1, d + 1):
        for b in range(1, d + 1):
            for kk in range(1, q + 1):
                if kk != g_of(a, b):
                    core.append(
                        ({s0 + a - 1: 1, t0 + b - 1: 1, v0 + kk - 1: neg1}, 0)
                    )  # type (iii)

    cons = list(core)
    for v in left:
        for b in range(d):
            cons.append(({xpos[v]: 1, t0 + b: neg1}, 0))  # type (iv)
        for l in range(q - 2 * d):
            cons.append(({xpos[v]: 1, r0 + l: neg1}, 0))
    for v in right:
        for a in range(d):
            cons.append(({ypos[v]: 1, s0 + a: neg1}, 0))  # type (v)
        for l in range(q - 2 * d):
            cons.append(({ypos[v]: 1, r0 + l: neg1}, 0))
    for (a, b), perm in constraints:
        allowed = {g_of(relab[a][va], relab[b][vb]) for (va, vb) in perm}
        for kk in range(1, q + 1):
            if kk not in allowed:
                cons.append(
                    ({xpos[a]: 1, ypos[b]: 1, v0 + kk - 1: neg1}, 0)
                )  # type (vi)

    def sign_view(constraint_list):
        return [
            {j: (1 if c == 1 else -1) for j, c in coeffs.items()}
            for coeffs, _ in constraint_list
        ]

    # the normalizer subsystem reuses the same variable indices shifted
    # down to 0..2q-1 (only anchor and v variables occur in the core)
    shift = {}
    for idx in range(s0, v0 + q):
        shift[idx] = idx - s0
    core_shifted = [
        ({shift[j]: c for j, c in coeffs.items()}, beta)
        for coeffs, beta in core
    ]
    subsystem = InequationSystem(
        2 * q,
        core_shifted,
        ctx=ctx,
        signed=sign_view(core_shifted),
        meta={"kind": "sum-core"},
    )
    system = InequationSystem(
        n_all,
        cons,
        ctx=ctx,
        signed=sign_view(cons),
        meta={"kind": "sum-inequations", "n_pairs": n, "domain_size": d},
    )
    return SumReduction(
        system=system,
        subsystem=subsystem,
        n_pairs=n,
        domain_size=d,
        sidon=sidon,
    )


# -- generator matrices ------------------------------------------------------------


def inequations_to_generator(sys_h, ctx=None):
    """Generator matrix with one column per homogeneous inequation, the
    column being its coefficient vector: x G has full support iff x
    satisfies the system.  Requires full row rank (else the assignment
    count and the codeword count differ by a power of q).

    With ctx given, a sum system is recast over that field by mapping the
    signing through (+1, -1) -> (1, -1 mod p).
    """
    if not sys_h.is_homogeneous():
        raise InhomogeneousError("system has inhomogeneous constraints")
    if sys_h.modulus is not None:
        raise InhomogeneousError("modular systems do not define a matrix")
    if ctx is None or ctx == sys_h.ctx:
        ctx = sys_h.ctx
        cols = [dict(coeffs) for coeffs, _ in sys_h.constraints]
    else:
        if sys_h.signed is None:
            raise InhomogeneousError(
                "only +-1 systems can be recast over another field"
            )
        neg1 = ctx.neg(1)
        cols = [
            {j: (1 if sgn == 1 else neg1) for j, sgn in signed.items()}
            for signed in sys_h.signed
        ]
    rows = [[0] * len(cols) for _ in range(sys_h.n)]
    for jcol, coeffs in enumerate(cols):
        for i, c in coeffs.items():
            rows[i][jcol] = c
    mat = FqMatrix(ctx, rows)
    if rank(mat) != sys_h.n:
        raise RankDeficientError(
            "inequation matrix has rank %d < %d" % (rank(mat), sys_h.n)
        )
    return mat


# -- end-to-end chains ---------------------------------------------------------------


def _prime_power_ctx(qval):
    for p in range(2, qval + 1):
        if qval % p == 0:
            e = 0
            t = qval
            while t % p == 0:
                t //= p
                e += 1
            if t == 1 and is_prime(p):
                return ctx_new(p, e)
            return None
    return None


@dataclass
class ChainResult:
    csp: CspInstance
    system: InequationSystem
    matrix: FqMatrix
    ctx: object
    count_factor: int       # |SAT(system)| = count_factor * |SAT(csp)|
    assignment_factor: int  # full-support assignments = q^this * codeword count
    meta: dict


def arity2_chain(csp, modulus=None, group=1):
    """Bipartite CSP -> modular differences -> homogeneous arity-2
    system -> weight-<=2 generator matrix over GF(M+1).

    The modulus defaults to the smallest valid one with M+1 a prime
    power.  Full-support counts of the matrix equal M * |SAT(csp)|.
    """
    if group > 1:
        csp = aggregate_vars(csp, group)
    left, right, _ = _normalized_bipartite(csp)
    n = max(len(left), len(right))
    d = max(len(dom) for dom in csp.domains)
    if modulus is None:
        modulus = max(3 * n, d * d + 1)
        while _prime_power_ctx(modulus + 1) is None:
            modulus += 1
    ctx = _prime_power_ctx(modulus + 1)
    if ctx is None:
        raise NotPrimeError("M+1 = %d is not a prime power" % (modulus + 1))
    sys_mod = csp_to_special_modular(csp, modulus)
    sys_h = modular_to_homogeneous(sys_mod, ctx)
    mat = inequations_to_generator(sys_h)
    return ChainResult(
        csp=csp,
        system=sys_h,
        matrix=mat,
        ctx=ctx,
        count_factor=modulus,
        assignment_factor=0,
        meta={"modulus": modulus, "modular_system": sys_mod},
    )


def sum_chain(csp, ctx, base_ctx=None):
    """Bipartite CSP -> arity-<=3 sum-inequations over GF(q) -> generator
    matrix over the base field (weight <= 3 columns).

    The raw inequation matrix always has the all-equal vector (doubled on
    the v block) in its left kernel, so the emitted matrix is its
    row-basis restriction and full-support assignment counts carry the
    factor q^(variables - rank).
    """
    red = csp_to_sum_inequations(csp, ctx)
    base_ctx = base_ctx or ctx_new(ctx.p, 1)
    sys_h = red.system
    neg1 = base_ctx.neg(1)
    cols = [
        {j: (1 if sgn == 1 else neg1) for j, sgn in signed.items()}
        for signed in sys_h.signed
    ]
    rows = [[0] * len(cols) for _ in range(sys_h.n)]
    for jcol, coeffs in enumerate(cols):
        for i, c in coeffs.items():
            rows[i][jcol] = c
    raw = FqMatrix(base_ctx, rows)
    mat = restrict_to_row_basis(raw)
    return ChainResult(
        csp=csp,
        system=sys_h,
        matrix=mat,
        ctx=base_ctx,
        count_factor=None,  # normalizer must be counted from the subsystem
        assignment_factor=sys_h.n - mat.k,
        meta={"reduction": red, "raw_rows": sys_h.n},
    )


# -- text formats ----------------------------------------------------------------


def canonical_csp(inst):
    """Equivalent instance whose domain values are 0..len-1 (text formats
    carry integer values only)."""
    maps = [
        {val: i for i, val in enumerate(dom)} for dom in inst.domains
    ]
    domains = [list(range(len(dom))) for dom in inst.domains]
    constraints = [
        (sup, {tuple(maps[j][v] for j, v in zip(sup, t)) for t in perm})
        for sup, perm in inst.constraints
    ]
    return CspInstance(domains, constraints, sides=inst.sides)


def write_csp(inst):
    inst = canonical_csp(inst)
    out = ["csp %d %d" % (inst.n_vars, len(inst.constraints))]
    if inst.sides is not None:
        out.append(
            "sides %d %s" % (
                len(inst.sides[0]),
                " ".join(str(v) for v in inst.sides[0] + inst.sides[1]),
            )
        )
    for dom in inst.domains:
        out.append("dom %d" % len(dom))
    for sup, perm in inst.constraints:
        flat = []
        for t in sorted(perm):
            flat.extend(t)
        out.append(
            "con %d %s %d %s"
            % (
                len(sup),
                " ".join(str(j) for j in sup),
                len(perm),
                " ".join(str(v) for v in flat),
            )
        )
    return "\n".join(out) + "\n"


def parse_csp(text):
    lines = [
        ln.strip() for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines or not lines[0].startswith("csp "):
        raise ParseError("CSP file must start with 'csp v m'")
    _, v, m = lines[0].split()
    v, m = int(v), int(m)
    domains = []
    constraints = []
    sides = None
    for line in lines[1:]:
        parts = line.split()
        if parts[0] == "sides":
            nl = int(parts[1])
            ids = [int(x) for x in parts[2:]]
            sides = (ids[:nl], ids[nl:])
        elif parts[0] == "dom":
            domains.append(list(range(int(parts[1]))))
        elif parts[0] == "con":
            a = int(parts[1])
            sup = tuple(int(x) for x in parts[2:2 + a])
            cnt = int(parts[2 + a])
            flat = [int(x) for x in parts[3 + a:]]
            if len(flat) != cnt * a:
                raise ParseError("constraint tuple data truncated")
            perm = {
                tuple(flat[i * a:(i + 1) * a]) for i in range(cnt)
            }
            constraints.append((sup, perm))
        else:
            raise ParseError("unknown CSP line: %s" % line)
    if len(domains) != v or len(constraints) != m:
        raise ParseError("CSP body does not match header counts")
    return CspInstance(domains, constraints, sides=sides)


def write_system(sys_i):
    if sys_i.modulus is not None:
        head = "ineq mod %d %d %d" % (sys_i.modulus, sys_i.n, sys_i.n_constraints)
    else:
        head = "ineq gf %d %d %d %d" % (
            sys_i.ctx.p, sys_i.ctx.d, sys_i.n, sys_i.n_constraints,
        )
    out = [head]
    for coeffs, beta in sys_i.constraints:
        items = sorted(coeffs.items())
        out.append(
            "%d %d %s"
            % (beta, len(items), " ".join("%d %d" % (j, c) for j, c in items))
        )
    return "\n".join(out) + "\n"


def parse_system(text):
    lines = [
        ln.strip() for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines or not lines[0].startswith("ineq "):
        raise ParseError("system file must start with 'ineq'")
    head = lines[0].split()
    if head[1] == "mod":
        modulus, n, m = int(head[2]), int(head[3]), int(head[4])
        ctx = None
    elif head[1] == "gf":
        p, d, n, m = int(head[2]), int(head[3]), int(head[4]), int(head[5])
        ctx = ctx_new(p, d)
        modulus = None
    else:
        raise ParseError("system header must be 'ineq mod ...' or 'ineq gf ...'")
    cons = []
    for line in lines[1:]:
        vals = [int(x) for x in line.split()]
        beta, nnz = vals[0], vals[1]
        items = vals[2:]
        if len(items) != 2 * nnz:
            raise ParseError("bad constraint line: %s" % line)
        coeffs = {items[2 * i]: items[2 * i + 1] for i in range(nnz)}
        cons.append((coeffs, beta))
    if len(cons) != m:
        raise ParseError("system body does not match header count")
    return InequationSystem(n, cons, modulus=modulus, ctx=ctx)
