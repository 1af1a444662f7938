"""Shared fixture builders and independent oracles for the test suite.

Everything here is deliberately implemented by a different route than
the library code it checks: cofactor determinants, Sylvester matrices,
Kronecker interpolation factoring, Schreier-style breadth-first kernel
generators, and plain brute-force enumeration.
"""

from fractions import Fraction

from ordroots.linalg import Lattice
from ordroots.ordercore import Order
from ordroots.polyfactor import ip_eval, qp, qp_divmod


# ---------------------------------------------------------------------------
# determinants and resultants, the slow classical way

def cofactor_det(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def sylvester_resultant(f, g):
    """Resultant via the Sylvester matrix and cofactor expansion."""
    m, n = len(f) - 1, len(g) - 1
    if m == 0 and n == 0:
        return 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(reversed(f)) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(reversed(g)) + [0] * (size - n - 1 - i))
    return cofactor_det(rows)


# ---------------------------------------------------------------------------
# Kronecker factorization (independent of Zassenhaus)

def _divisors_signed(n):
    n = abs(n)
    out = []
    for d in range(1, n + 1):
        if n % d == 0:
            out.extend([d, -d])
    return out


def kronecker_factor(f):
    """Irreducible factors of a primitive squarefree integer polynomial,
    by interpolation through divisors of sample values.  Exponential;
    keep the degree small."""
    from itertools import product

    f = list(f)
    n = len(f) - 1
    if n <= 1:
        return [f]
    half = n // 2
    for d in range(1, half + 1):
        xs = list(range(d + 1))
        vals = [ip_eval(f, x) for x in xs]
        if any(v == 0 for v in vals):
            # integer root: split off the linear factor
            r = next(x for x, v in zip(xs, vals) if v == 0)
            quo = qp_divmod(qp(f), qp([-r, 1]))[0]
            assert all(c.denominator == 1 for c in quo)
            return sorted(
                kronecker_factor([-r, 1]) + kronecker_factor([int(c) for c in quo]),
                key=lambda h: (len(h), tuple(h)),
            )
        for choice in product(*[_divisors_signed(v) for v in vals]):
            cand = _lagrange_int(xs, choice)
            if cand is None or len(cand) - 1 != d:
                continue
            quo, rem = qp_divmod(qp(f), qp(cand))
            if rem or any(c.denominator != 1 for c in quo):
                continue
            return sorted(
                kronecker_factor(cand) + kronecker_factor([int(c) for c in quo]),
                key=lambda h: (len(h), tuple(h)),
            )
    return [f]


def _lagrange_int(xs, ys):
    out = [Fraction(0)]
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        num = [Fraction(yi)]
        den = Fraction(1)
        for j, xj in enumerate(xs):
            if i != j:
                num = _poly_mul_frac(num, [Fraction(-xj), Fraction(1)])
                den *= xi - xj
        scaled = [c / den for c in num]
        out = _poly_add_frac(out, scaled)
    while out and not out[-1]:
        out.pop()
    if not out or any(c.denominator != 1 for c in out):
        return None
    return [int(c) for c in out]


def _poly_mul_frac(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_add_frac(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return out


# ---------------------------------------------------------------------------
# product orders and suborders

def product_order(tables):
    """Order structure of a direct product, from the factors' tables."""
    sizes = [len(t) for t in tables]
    n = sum(sizes)
    offs = [0]
    for s in sizes:
        offs.append(offs[-1] + s)
    table = [[[0] * n for _ in range(n)] for _ in range(n)]
    for t_idx, t in enumerate(tables):
        o = offs[t_idx]
        s = sizes[t_idx]
        for i in range(s):
            for j in range(s):
                for k in range(s):
                    table[o + i][o + j][o + k] = int(t[i][j][k])
    return Order(table)


def suborder(big: Order, lattice_cols) -> Order:
    """Order on a full-rank multiplicatively closed sublattice containing 1."""
    n = big.rank
    lat = Lattice(n, [list(c) for c in lattice_cols])
    assert lat.rank == n, "suborder lattice must have full rank"
    assert lat.contains(list(big.one)), "suborder must contain 1"
    basis = [lat.basis.col(j) for j in range(n)]
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = big.mul(basis[i], basis[j])
            coords = lat.coords([int(c) for c in prod])
            assert coords is not None, "sublattice not multiplicatively closed"
            row.append(coords)
        table.append(row)
    return Order(table)


def scalar_suborder(big: Order, m: int) -> Order:
    """Z*1 + m*big."""
    cols = [list(big.one)] + [
        [m * int(i == j) for i in range(big.rank)] for j in range(big.rank)
    ]
    return suborder(big, cols)


def diagonal_congruence_suborder(big: Order, copies: int, m: int) -> Order:
    """{(x_1..x_k) in big^k : x_i = x_j mod m}."""
    prod = product_order([big.algebra.table] * copies)
    n = big.rank
    cols = []
    for j in range(n):
        col = []
        for _ in range(copies):
            col.extend(int(i == j) for i in range(n))
        cols.append(col)
    for c in range(copies):
        for j in range(n):
            col = [0] * (n * copies)
            col[c * n + j] = m
            cols.append(col)
    return suborder(prod, cols)


# ---------------------------------------------------------------------------
# randomly presented finite abelian groups

def quotient_group(rel_cols):
    """Presentation of Z^k / <rel_cols> with identity-map dlog."""
    from ordroots.abgroup import EffPresentation, GroupOps

    k = len(rel_cols[0]) if rel_cols else 1
    lat = Lattice(k, rel_cols)
    assert lat.rank == k

    def mul(a, b):
        return tuple(lat.reduce([x + y for x, y in zip(a, b)]))

    def inv(a):
        return tuple(lat.reduce([-x for x in a]))

    zero = tuple(lat.reduce([0] * k))
    ops = GroupOps(mul=mul, inv=inv, identity=zero)
    gens = tuple(tuple(lat.reduce([int(i == j) for i in range(k)])) for j in range(k))

    def dlog(g):
        if len(g) != k:
            return None
        return list(g)

    rels = tuple(tuple(c) for c in lat.basis.cols)
    return EffPresentation(ops=ops, gens=gens, rels=rels, dlog=dlog), lat


def random_presented_group(rng, max_order=2000):
    k = rng.randint(1, 4)
    diag = []
    left = max_order
    for _ in range(k):
        d = rng.randint(1, min(12, max(1, left)))
        diag.append(d)
        left //= max(1, d)
    cols = [[diag[j] if i == j else 0 for i in range(k)] for j in range(k)]
    for _ in range(3 * k):
        i, j = rng.randrange(k), rng.randrange(k)
        if i != j:
            c = rng.randint(-2, 2)
            cols[i] = [a + c * b for a, b in zip(cols[i], cols[j])]
    return quotient_group(cols)


# ---------------------------------------------------------------------------
# brute-force group machinery

def brute_closure(mul, identity, gens):
    """All products of the generators (and their powers), as a set."""
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def schreier_kernel(mul, identity, targets, normalize=None):
    """(reachable set, preimage dict, kernel lattice) of the map
    Z^targets -> G by breadth-first search with Schreier relations.

    ``normalize`` maps an element to a coset label; with the default
    identity map the kernel is that of the plain evaluation map, with a
    coset normalizer it is the kernel modulo the normalizing subgroup.
    """
    if normalize is None:
        normalize = lambda x: x
    k = len(targets)
    start = normalize(identity)
    pre = {start: [0] * k}
    frontier = [(identity, start)]
    rels = []
    reach = {start}
    while frontier:
        nxt = []
        for elem, label in frontier:
            base = pre[label]
            for i, t in enumerate(targets):
                y = mul(elem, t)
                ylabel = normalize(y)
                word = list(base)
                word[i] += 1
                if ylabel in pre:
                    rels.append([a - b for a, b in zip(word, pre[ylabel])])
                else:
                    pre[ylabel] = word
                    reach.add(ylabel)
                    nxt.append((y, ylabel))
        frontier = nxt
    return reach, pre, Lattice(k, rels)


def brute_force_torsion_in_order(ctx):
    """Enumerate the residue-product torsion and keep what lies in the order."""
    from itertools import product as iproduct

    lists = []
    for i, K in enumerate(ctx.dec.components):
        rt = ctx.residue_torsion(i)
        elems = []
        acc = K.one()
        for _ in range(rt.order):
            elems.append(acc)
            acc = K.mul(acc, rt.theta)
        lists.append(elems)
    out = set()
    for combo in iproduct(*lists):
        v = ctx.ambient.from_blocks(list(combo))
        coords = ctx.from_ambient(v)
        if coords is not None:
            out.add(tuple(coords))
    return out


def quotient_coset_normalizer(rel_lattice, modulo_vectors):
    """Coset labels in Z^k/(rel + <modulo>) for groups presented as
    Z^k modulo a relation lattice, via canonical lattice reduction."""
    big = Lattice(
        rel_lattice.dim,
        [list(c) for c in rel_lattice.basis.cols] + [list(v) for v in modulo_vectors],
    )

    def norm(x):
        return tuple(big.reduce(list(x)))

    return norm
