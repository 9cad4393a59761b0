"""Finite unital rings on element indices, with automorphism machinery.

A ring is a set of element indices ``0..size-1`` together with addition and
multiplication maps.  Small rings keep materialized operation tables; larger
structured rings (matrix, product, triangular) evaluate arithmetic on demand
through closures rendered to the same interface.  Every factory validates the
ring axioms at construction: exhaustively up to a size cap, by seeded random
sampling above it.
"""

from __future__ import annotations

import random
from itertools import product

# Structured rings materialize full operation tables up to this size;
# beyond it arithmetic stays closure-backed.
TABLE_LIMIT = 256

# Factories refuse to build rings larger than this unless told otherwise.
DEFAULT_SIZE_CAP = 4096

# Axiom validation is exhaustive up to this size, sampled above.
EXHAUSTIVE_VALIDATION_CAP = 64


class RingAxiomError(ValueError):
    """A ring axiom failed; the message carries the first failing triple."""


class FiniteRing:
    """A finite unital ring over element indices 0..size-1.

    ``add``/``mul``/``neg`` operate on indices.  Instances are immutable
    after construction and safe to share.
    """

    __slots__ = ("size", "zero", "one", "name", "_add", "_mul", "_neg",
                 "_add_rows", "_mul_rows", "_neg_row", "_repr_fn")

    def __init__(self, size: int, add, mul, zero: int, one: int,
                 name: str = "ring", neg=None, element_repr=None,
                 validate: bool = True, seed: int = 0):
        if size < 1:
            raise RingAxiomError("empty ring: size must be at least 1")
        self.size = size
        self.zero = zero
        self.one = one
        self.name = name
        self._repr_fn = element_repr
        if size <= TABLE_LIMIT:
            rows = [[add(a, b) for b in range(size)] for a in range(size)]
            mrows = [[mul(a, b) for b in range(size)] for a in range(size)]
            self._add_rows = rows
            self._mul_rows = mrows
            self._add = None
            self._mul = None
        else:
            self._add_rows = None
            self._mul_rows = None
            self._add = add
            self._mul = mul
        if neg is None:
            neg_row = [self._find_negative(a) for a in range(size)]
        else:
            neg_row = [neg(a) for a in range(size)]
        self._neg_row = neg_row
        self._neg = None
        if validate:
            validate_ring(self, seed=seed)

    def _find_negative(self, a: int) -> int:
        for x in range(self.size):
            if self.add(a, x) == self.zero:
                return x
        raise RingAxiomError(f"element {a} has no additive inverse")

    def add(self, a: int, b: int) -> int:
        if self._add_rows is not None:
            return self._add_rows[a][b]
        return self._add(a, b)

    def mul(self, a: int, b: int) -> int:
        if self._mul_rows is not None:
            return self._mul_rows[a][b]
        return self._mul(a, b)

    def neg(self, a: int) -> int:
        return self._neg_row[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def elements(self) -> range:
        return range(self.size)

    def element_repr(self, a: int) -> str:
        if self._repr_fn is not None:
            return self._repr_fn(a)
        return str(a)

    def __repr__(self) -> str:
        return f"FiniteRing({self.name}, size={self.size})"


def validate_ring(ring: FiniteRing, exhaustive_cap: int = EXHAUSTIVE_VALIDATION_CAP,
                  samples: int = 2000, seed: int = 0) -> None:
    """Check the ring axioms, raising RingAxiomError on the first violation.

    Exhaustive for ``size <= exhaustive_cap`` (all triples), otherwise the
    triple-quantified axioms are checked on seeded random samples while the
    identity and inverse laws stay exhaustive.
    """
    n = ring.size
    add, mul, zero, one = ring.add, ring.mul, ring.zero, ring.one
    for a in range(n):
        if add(zero, a) != a or add(a, zero) != a:
            raise RingAxiomError(f"additive identity fails at {a}")
        if add(a, ring.neg(a)) != zero:
            raise RingAxiomError(f"additive inverse fails at {a}")
        if mul(one, a) != a or mul(a, one) != a:
            raise RingAxiomError(f"multiplicative identity fails at {a}")
    for a in range(n):
        for b in range(n):
            if add(a, b) != add(b, a):
                raise RingAxiomError(f"addition not commutative at ({a},{b})")
    if n <= exhaustive_cap:
        triples = product(range(n), repeat=3)
    else:
        rng = random.Random(seed)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                   for _ in range(samples))
    for a, b, c in triples:
        if add(add(a, b), c) != add(a, add(b, c)):
            raise RingAxiomError(f"addition not associative at ({a},{b},{c})")
        if mul(mul(a, b), c) != mul(a, mul(b, c)):
            raise RingAxiomError(f"multiplication not associative at ({a},{b},{c})")
        if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)):
            raise RingAxiomError(f"left distributivity fails at ({a},{b},{c})")
        if mul(add(a, b), c) != add(mul(a, c), mul(b, c)):
            raise RingAxiomError(f"right distributivity fails at ({a},{b},{c})")


# ---------------------------------------------------------------------------
# factories

def cyclic_ring(n: int) -> FiniteRing:
    """The ring of integers modulo n.  n=1 gives the zero ring."""
    if n < 1:
        raise RingAxiomError("empty ring: modulus must be at least 1")
    return FiniteRing(
        n,
        add=lambda a, b: (a + b) % n,
        mul=lambda a, b: (a * b) % n,
        neg=lambda a: (-a) % n,
        zero=0,
        one=1 % n,
        name=f"Z{n}",
    )


def product_ring(a: FiniteRing, b: FiniteRing, size_cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
    """Direct product with componentwise operations; index = i*b.size + j."""
    size = a.size * b.size
    if size > size_cap:
        raise RingAxiomError(f"size cap exceeded: {size} > {size_cap}")
    bs = b.size

    def enc(i, j):
        return i * bs + j

    return FiniteRing(
        size,
        add=lambda x, y: enc(a.add(x // bs, y // bs), b.add(x % bs, y % bs)),
        mul=lambda x, y: enc(a.mul(x // bs, y // bs), b.mul(x % bs, y % bs)),
        neg=lambda x: enc(a.neg(x // bs), b.neg(x % bs)),
        zero=enc(a.zero, b.zero),
        one=enc(a.one, b.one),
        name=f"{a.name}x{b.name}",
        element_repr=lambda x: f"({a.element_repr(x // bs)},{b.element_repr(x % bs)})",
    )


def _digits(x: int, base: int, count: int) -> list[int]:
    out = []
    for _ in range(count):
        out.append(x % base)
        x //= base
    return out


def _undigits(ds, base: int) -> int:
    x = 0
    for d in reversed(ds):
        x = x * base + d
    return x


def matrix_ring(base: FiniteRing, k: int, size_cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
    """Full k-by-k matrix ring over ``base``; entries packed row-major."""
    ncells = k * k
    size = base.size ** ncells
    if size > size_cap:
        raise RingAxiomError(f"size cap exceeded: {size} > {size_cap}")
    bs = base.size

    def add(x, y):
        xs, ys = _digits(x, bs, ncells), _digits(y, bs, ncells)
        return _undigits([base.add(p, q) for p, q in zip(xs, ys)], bs)

    def mul(x, y):
        xs, ys = _digits(x, bs, ncells), _digits(y, bs, ncells)
        out = []
        for i in range(k):
            for j in range(k):
                acc = base.zero
                for t in range(k):
                    acc = base.add(acc, base.mul(xs[i * k + t], ys[t * k + j]))
                out.append(acc)
        return _undigits(out, bs)

    def neg(x):
        return _undigits([base.neg(d) for d in _digits(x, bs, ncells)], bs)

    one_cells = [base.one if i == j else base.zero for i in range(k) for j in range(k)]

    def mrepr(x):
        ds = _digits(x, bs, ncells)
        rows = ["[" + ",".join(base.element_repr(ds[i * k + j]) for j in range(k)) + "]"
                for i in range(k)]
        return "[" + ",".join(rows) + "]"

    return FiniteRing(size, add=add, mul=mul, neg=neg, zero=0,
                      one=_undigits(one_cells, bs),
                      name=f"M{k}({base.name})", element_repr=mrepr)


def upper_triangular_ring(base: FiniteRing, k: int, size_cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
    """Upper triangular k-by-k matrices over ``base``.

    Cells (i,j) with i <= j are packed in row-major order of the upper
    triangle, so size = base.size ** (k*(k+1)/2).
    """
    cells = [(i, j) for i in range(k) for j in range(i, k)]
    pos = {c: t for t, c in enumerate(cells)}
    ncells = len(cells)
    size = base.size ** ncells
    if size > size_cap:
        raise RingAxiomError(f"size cap exceeded: {size} > {size_cap}")
    bs = base.size

    def add(x, y):
        xs, ys = _digits(x, bs, ncells), _digits(y, bs, ncells)
        return _undigits([base.add(p, q) for p, q in zip(xs, ys)], bs)

    def mul(x, y):
        xs, ys = _digits(x, bs, ncells), _digits(y, bs, ncells)
        out = []
        for (i, j) in cells:
            acc = base.zero
            for t in range(i, j + 1):
                acc = base.add(acc, base.mul(xs[pos[i, t]], ys[pos[t, j]]))
            out.append(acc)
        return _undigits(out, bs)

    def neg(x):
        return _undigits([base.neg(d) for d in _digits(x, bs, ncells)], bs)

    one_cells = [base.one if i == j else base.zero for (i, j) in cells]

    def trepr(x):
        ds = _digits(x, bs, ncells)
        rows = []
        for i in range(k):
            row = [base.element_repr(ds[pos[i, j]]) if j >= i else "0" for j in range(k)]
            rows.append("[" + ",".join(row) + "]")
        return "[" + ",".join(rows) + "]"

    return FiniteRing(size, add=add, mul=mul, neg=neg, zero=0,
                      one=_undigits(one_cells, bs),
                      name=f"T{k}({base.name})", element_repr=trepr)


def table_ring(add_table, mul_table, zero: int | None = None,
               one: int | None = None, name: str = "table") -> FiniteRing:
    """Build a ring from explicit operation tables, validating every axiom.

    ``zero`` and ``one`` are located by scanning when not given.
    """
    n = len(add_table)
    if n < 1 or any(len(row) != n for row in add_table) or \
            len(mul_table) != n or any(len(row) != n for row in mul_table):
        raise RingAxiomError("tables must be square and of matching size")
    if zero is None:
        zero = next((z for z in range(n)
                     if all(add_table[z][a] == a for a in range(n))), None)
        if zero is None:
            raise RingAxiomError("no additive identity found in table")
    if one is None:
        one = next((e for e in range(n)
                    if all(mul_table[e][a] == a == mul_table[a][e] for a in range(n))), None)
        if one is None:
            raise RingAxiomError("no multiplicative identity found in table")
    return FiniteRing(
        n,
        add=lambda a, b: add_table[a][b],
        mul=lambda a, b: mul_table[a][b],
        zero=zero,
        one=one,
        name=name,
    )


# ---------------------------------------------------------------------------
# elements of interest

def idempotents(ring: FiniteRing) -> list[int]:
    """All x with x*x == x, in ascending index order."""
    return [x for x in ring.elements() if ring.mul(x, x) == x]


def units(ring: FiniteRing) -> list[int]:
    """All two-sided invertible elements, ascending."""
    out = []
    for u in ring.elements():
        for v in ring.elements():
            if ring.mul(u, v) == ring.one and ring.mul(v, u) == ring.one:
                out.append(u)
                break
    return out


def unit_inverse(ring: FiniteRing, u: int) -> int:
    for v in ring.elements():
        if ring.mul(u, v) == ring.one and ring.mul(v, u) == ring.one:
            return v
    raise ValueError(f"element {u} is not a unit of {ring.name}")


# ---------------------------------------------------------------------------
# automorphisms

class RingAut:
    """A ring automorphism stored as the image array of every element."""

    __slots__ = ("ring", "perm")

    def __init__(self, ring: FiniteRing, perm, validate: bool = False):
        self.ring = ring
        self.perm = tuple(perm)
        if validate:
            self.validate()

    def validate(self) -> None:
        ring, perm = self.ring, self.perm
        n = ring.size
        if len(perm) != n or len(set(perm)) != n:
            raise RingAxiomError("automorphism image array is not a bijection")
        if perm[ring.one] != ring.one:
            raise RingAxiomError("automorphism does not fix 1")
        for a in range(n):
            for b in range(n):
                if perm[ring.add(a, b)] != ring.add(perm[a], perm[b]):
                    raise RingAxiomError(f"automorphism not additive at ({a},{b})")
                if perm[ring.mul(a, b)] != ring.mul(perm[a], perm[b]):
                    raise RingAxiomError(f"automorphism not multiplicative at ({a},{b})")

    def apply(self, a: int) -> int:
        return self.perm[a]

    def compose(self, other: "RingAut") -> "RingAut":
        # (self @ other)(x) = self(other(x))
        return RingAut(self.ring, tuple(self.perm[p] for p in other.perm))

    def inverse(self) -> "RingAut":
        inv = [0] * len(self.perm)
        for i, p in enumerate(self.perm):
            inv[p] = i
        return RingAut(self.ring, tuple(inv))

    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm))

    def order(self) -> int:
        k, acc = 1, self
        ident = identity_automorphism(self.ring)
        while acc.perm != ident.perm:
            acc = acc.compose(self)
            k += 1
        return k

    def __eq__(self, other):
        return isinstance(other, RingAut) and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    def __repr__(self):
        return f"RingAut({self.ring.name}, {self.perm})"


def identity_automorphism(ring: FiniteRing) -> RingAut:
    return RingAut(ring, tuple(range(ring.size)))


def swap_automorphism(ring: FiniteRing) -> RingAut:
    """Coordinate swap on a product ring with equal square factors.

    Only valid when the ring was built as product_ring(a, a); validated.
    """
    n = ring.size
    bs = int(round(n ** 0.5))
    if bs * bs != n:
        raise RingAxiomError(f"{ring.name} is not a square product; swap undefined")
    perm = [(x % bs) * bs + (x // bs) for x in range(n)]
    return RingAut(ring, perm, validate=True)


def inner_automorphism(ring: FiniteRing, u: int) -> RingAut:
    """Conjugation x -> u*x*u^-1 by the unit ``u``."""
    ui = unit_inverse(ring, u)
    perm = [ring.mul(ring.mul(u, x), ui) for x in range(ring.size)]
    return RingAut(ring, perm)


def _additive_order(ring: FiniteRing, a: int) -> int:
    k, acc = 1, a
    while acc != ring.zero:
        acc = ring.add(acc, a)
        k += 1
    return k


def _additive_generators(ring: FiniteRing) -> list[int]:
    """A small additive generating set, starting with 1."""
    gens = [ring.one]
    span = _additive_span(ring, gens)
    for a in ring.elements():
        if a not in span:
            gens.append(a)
            span = _additive_span(ring, gens)
            if len(span) == ring.size:
                break
    return gens


def _additive_span(ring: FiniteRing, gens) -> set[int]:
    span = {ring.zero}
    for g in gens:
        cur = g
        layer = set(span)
        while cur not in span:
            layer |= {ring.add(x, cur) for x in span}
            cur = ring.add(cur, g)
        span = layer
    return span


def automorphisms(ring: FiniteRing, cap: int = 64,
                  generators: list[RingAut] | None = None) -> list[RingAut]:
    """The full automorphism group, identity first.

    Exhaustive search up to ``cap`` elements: since any automorphism fixes 1
    and is additive, it is determined by its images on additive generators;
    candidates are extended additively with consistency pruning before the
    multiplicative law is checked on generator pairs.  Above the cap a set of
    generating automorphisms must be supplied and is closed under
    composition.
    """
    if generators is not None:
        return _close_automorphism_group(ring, generators)
    if ring.size > cap:
        raise ValueError(
            f"{ring.name} has {ring.size} elements; raise cap or supply generators")

    gens = _additive_generators(ring)
    found: list[tuple[int, ...]] = []

    # phi maps the current additive span; extended one generator at a time.
    def extend(idx: int, phi: dict[int, int]):
        if idx == len(gens):
            perm = tuple(phi[a] for a in ring.elements())
            for ga in gens:
                for gb in gens:
                    if phi[ring.mul(ga, gb)] != ring.mul(phi[ga], phi[gb]):
                        return
            found.append(perm)
            return
        g = gens[idx]
        m = 1
        acc = g
        while acc not in phi:
            acc = ring.add(acc, g)
            m += 1
        target = phi[acc]  # image of m*g is forced
        for y in ring.elements():
            # m*y must hit the forced image
            ym = ring.zero
            for _ in range(m):
                ym = ring.add(ym, y)
            if ym != target:
                continue
            ext = dict(phi)
            ok = True
            for x, fx in phi.items():
                cur_src, cur_dst = x, fx
                for _ in range(1, m):
                    cur_src = ring.add(cur_src, g)
                    cur_dst = ring.add(cur_dst, y)
                    if cur_src in ext or cur_dst in ext.values():
                        ok = False
                        break
                    ext[cur_src] = cur_dst
                if not ok:
                    break
            if ok:
                extend(idx + 1, ext)

    base = {ring.zero: ring.zero}
    cur = ring.one
    while cur != ring.zero:
        base[cur] = cur  # span of 1 is fixed pointwise: phi(k*1) = k*phi(1) = k*1
        cur = ring.add(cur, ring.one)
    if len(base) == ring.size:
        found.append(tuple(range(ring.size)))
    else:
        extend(1, base)

    perms = sorted(set(found))
    ident = tuple(range(ring.size))
    ordered = [ident] + [p for p in perms if p != ident]
    return [RingAut(ring, p) for p in ordered]


def _close_automorphism_group(ring: FiniteRing, generators: list[RingAut]) -> list[RingAut]:
    ident = identity_automorphism(ring)
    for g in generators:
        g.validate()
    seen = {ident.perm: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in generators:
                c = a.compose(g)
                if c.perm not in seen:
                    seen[c.perm] = c
                    nxt.append(c)
        frontier = nxt
    perms = sorted(seen)
    return [ident] + [seen[p] for p in perms if p != ident.perm]
