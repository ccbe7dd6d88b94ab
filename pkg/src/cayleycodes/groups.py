"""Finite groups as dense multiplication tables.

Elements are indices 0..n-1 into an n x n table; there are no symbolic
words.  Constructors exist for cyclic, dihedral and abelian-product groups,
direct products, and arbitrary validated tables.  Everything downstream
(Cayley graphs, criteria, characters) consumes these types.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from functools import cached_property

from .errors import BoundExceededError, CayleyCodesError, GroupTableError

DEFAULT_SUBGROUP_BOUND = 64
DEFAULT_AUTOMORPHISM_BOUND = 24


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its complete multiplication table.

    ``mult[i][j]`` is the index of the product of element i by element j.
    ``kind`` tags how the group was built: one of "cyclic", "dihedral",
    "abelian-product", "product", "table".  For cyclic and abelian-product
    groups ``decomposition`` records the canonical cyclic factor orders
    (used by the character machinery and the generator-expression grammar).
    """

    order: int
    mult: tuple[tuple[int, ...], ...]
    identity: int
    inv: tuple[int, ...]
    labels: tuple[str, ...] | None = None
    kind: str = "table"
    decomposition: tuple[int, ...] | None = None

    def mul(self, i: int, j: int) -> int:
        return self.mult[i][j]

    def inverse(self, i: int) -> int:
        return self.inv[i]

    def power(self, i: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv[i], -k)
        acc = self.identity
        for _ in range(k):
            acc = self.mult[acc][i]
        return acc

    def conjugate(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.mult[self.mult[g][x]][self.inv[g]]

    def element_order(self, i: int) -> int:
        acc, k = i, 1
        while acc != self.identity:
            acc = self.mult[acc][i]
            k += 1
        return k

    def cyclic_span(self, i: int) -> frozenset[int]:
        """The cyclic subgroup <i> as a set of indices."""
        out = {self.identity}
        acc = i
        while acc != self.identity:
            out.add(acc)
            acc = self.mult[acc][i]
        return frozenset(out)

    @cached_property
    def is_abelian(self) -> bool:
        n = self.order
        return all(
            self.mult[i][j] == self.mult[j][i]
            for i in range(n)
            for j in range(i + 1, n)
        )

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        return tuple(self.element_order(i) for i in range(self.order))

    def elements(self) -> range:
        return range(self.order)

    def label(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        return str(i)

    def __repr__(self):
        return f"FiniteGroup(order={self.order}, kind={self.kind!r})"


@dataclass(frozen=True)
class Subgroup:
    """A closed subset of a parent group, with generator witnesses."""

    elements: tuple[int, ...]
    generators: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def __contains__(self, i: int) -> bool:
        return i in self.element_set()


@dataclass(frozen=True)
class Automorphism:
    """A group automorphism stored as a length-n permutation of indices."""

    map: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.map[i]

    def apply_set(self, subset) -> frozenset[int]:
        return frozenset(self.map[i] for i in subset)

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other: (self . other)(x) = self(other(x))."""
        return Automorphism(tuple(self.map[j] for j in other.map))

    def inverse(self) -> "Automorphism":
        out = [0] * len(self.map)
        for i, j in enumerate(self.map):
            out[j] = i
        return Automorphism(tuple(out))

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.map))


# ---------------------------------------------------------------------------
# constructors


def _inverses_from_table(mult, identity):
    n = len(mult)
    inv = [None] * n
    for i in range(n):
        for j in range(n):
            if mult[i][j] == identity and mult[j][i] == identity:
                inv[i] = j
                break
        if inv[i] is None:
            raise GroupTableError("missing-inverse", (i,))
    return tuple(inv)


def make_cyclic(n: int) -> FiniteGroup:
    """Cyclic group of order n with mult(i, j) = (i + j) mod n."""
    if n < 1:
        raise CayleyCodesError("cyclic order must be >= 1")
    mult = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    inv = tuple((-i) % n for i in range(n))
    labels = tuple("e" if i == 0 else "a" if i == 1 else f"a^{i}" for i in range(n))
    return FiniteGroup(n, mult, 0, inv, labels, "cyclic", (n,))


def make_dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n, presented <a, b | a^n = b^2 = (ab)^2 = e>.

    Indexing: rotations a^i at 0..n-1, then reflections a^i b at n..2n-1.
    """
    if n < 3:
        raise CayleyCodesError("dihedral parameter must be >= 3")
    size = 2 * n

    def prod(x, y):
        xi, xr = x % n, x >= n
        yi, yr = y % n, y >= n
        # a^i b . a^j = a^(i-j) b ; a^i b . a^j b = a^(i-j)
        if xr:
            k = (xi - yi) % n
        else:
            k = (xi + yi) % n
        return k + (n if xr != yr else 0)

    mult = tuple(tuple(prod(x, y) for y in range(size)) for x in range(size))
    inv = _inverses_from_table(mult, 0)
    labels = []
    for i in range(n):
        labels.append("e" if i == 0 else "a" if i == 1 else f"a^{i}")
    for i in range(n):
        labels.append("b" if i == 0 else f"a^{i}*b" if i > 1 else "a*b")
    return FiniteGroup(size, mult, 0, inv, tuple(labels), "dihedral")


def make_abelian(orders) -> FiniteGroup:
    """Direct product of cyclic groups of the given orders (each >= 2).

    Element indices are mixed-radix over the orders, the first factor most
    significant; the decomposition is stored for the character machinery.
    """
    orders = tuple(int(m) for m in orders)
    if not orders:
        raise CayleyCodesError("abelian product needs at least one factor")
    if any(m < 2 for m in orders):
        raise CayleyCodesError("abelian factor orders must be >= 2")
    n = 1
    for m in orders:
        n *= m
    strides = []
    acc = n
    for m in orders:
        acc //= m
        strides.append(acc)

    def decode(i):
        return tuple((i // s) % m for s, m in zip(strides, orders))

    def encode(t):
        return sum((x % m) * s for x, s, m in zip(t, strides, orders))

    mult = tuple(
        tuple(
            encode(tuple(x + y for x, y in zip(decode(i), decode(j))))
            for j in range(n)
        )
        for i in range(n)
    )
    inv = tuple(encode(tuple(-x for x in decode(i))) for i in range(n))

    def lab(i):
        t = decode(i)
        parts = [
            f"a{k + 1}" if x == 1 else f"a{k + 1}^{x}"
            for k, x in enumerate(t)
            if x != 0
        ]
        return "*".join(parts) if parts else "e"

    labels = tuple(lab(i) for i in range(n))
    return FiniteGroup(n, mult, 0, inv, labels, "abelian-product", orders)


def from_table(table, labels=None) -> FiniteGroup:
    """Validate an arbitrary n x n index matrix as a group table.

    Rejections report the first failing witness under a lexicographic scan,
    with distinct reasons for shape, identity, Latin-square, inverse and
    associativity failures.
    """
    n = len(table)
    if n == 0:
        raise GroupTableError("not-square")
    for i, row in enumerate(table):
        if len(row) != n:
            raise GroupTableError("not-square", (i,))
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                raise GroupTableError("bad-index", (i, j))
    mult = tuple(tuple(row) for row in table)

    identity = None
    for e in range(n):
        if all(mult[e][x] == x and mult[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        raise GroupTableError("no-identity")

    full = set(range(n))
    for i in range(n):
        if set(mult[i]) != full:
            raise GroupTableError("not-latin-square", ("row", i))
    for j in range(n):
        if {mult[i][j] for i in range(n)} != full:
            raise GroupTableError("not-latin-square", ("column", j))

    inv = _inverses_from_table(mult, identity)

    for x in range(n):
        for y in range(n):
            for z in range(n):
                if mult[mult[x][y]][z] != mult[x][mult[y][z]]:
                    raise GroupTableError("non-associative", (x, y, z))

    return FiniteGroup(n, mult, identity, inv, labels, "table")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Componentwise product on pairs, indexed i * |H| + j."""
    n, m = g.order, h.order
    size = n * m
    mult = tuple(
        tuple(
            g.mult[i // m][j // m] * m + h.mult[i % m][j % m]
            for j in range(size)
        )
        for i in range(size)
    )
    identity = g.identity * m + h.identity
    inv = tuple(g.inv[i // m] * m + h.inv[i % m] for i in range(size))
    labels = None
    if g.labels is not None and h.labels is not None:
        labels = tuple(
            f"({g.labels[i // m]},{h.labels[i % m]})" for i in range(size)
        )
    decomposition = None
    if g.decomposition is not None and h.decomposition is not None:
        decomposition = g.decomposition + h.decomposition
    return FiniteGroup(size, mult, identity, inv, labels, "product", decomposition)


# ---------------------------------------------------------------------------
# subgroups and cosets


def closure(g: FiniteGroup, seed) -> frozenset[int]:
    """Smallest subgroup (as a set) containing the seed elements.

    Worklist algorithm: each new element is multiplied (both ways) against
    everything already present, so every pair is formed exactly once.
    """
    mult = g.mult
    out = {g.identity}
    queue = [x for x in seed]
    while queue:
        z = queue.pop()
        if z in out:
            continue
        out.add(z)
        for k in list(out):
            for p in (mult[z][k], mult[k][z]):
                if p not in out:
                    queue.append(p)
    return frozenset(out)


def subgroup_generated(g: FiniteGroup, gens) -> Subgroup:
    gens = tuple(sorted(set(gens)))
    return Subgroup(tuple(sorted(closure(g, gens))), gens)


def generating_set(g: FiniteGroup, elems=None) -> tuple[int, ...]:
    """A small generating set, chosen greedily by ascending index."""
    target = frozenset(elems) if elems is not None else frozenset(range(g.order))
    gens = []
    span = frozenset({g.identity})
    for x in sorted(target):
        if x not in span:
            gens.append(x)
            span = closure(g, span | {x})
            if span == target:
                break
    return tuple(gens)


def all_subgroups(g: FiniteGroup, max_order: int = DEFAULT_SUBGROUP_BOUND):
    """Every subgroup exactly once, sorted by (order, elements).

    Breadth-first closure over generator supersets: repeatedly extend each
    known subgroup by one outside element and close.  Results are memoized
    per group (the types are immutable).
    """
    if g.order > max_order:
        raise BoundExceededError(
            f"all_subgroups bound exceeded: |G|={g.order} > {max_order}"
        )
    return list(_all_subgroups_cached(g))


@functools.lru_cache(maxsize=64)
def _all_subgroups_cached(g: FiniteGroup):
    trivial = frozenset({g.identity})
    found: dict[frozenset[int], tuple[int, ...]] = {trivial: ()}
    frontier = [trivial]
    while frontier:
        fresh = []
        for h in frontier:
            base_gens = found[h]
            for x in range(g.order):
                if x in h:
                    continue
                k = closure(g, h | {x})
                if k not in found:
                    found[k] = base_gens + (x,)
                    fresh.append(k)
        frontier = fresh
    subs = [
        Subgroup(tuple(sorted(h)), gens) for h, gens in found.items()
    ]
    subs.sort(key=lambda s: (s.order, s.elements))
    return tuple(subs)


def is_subgroup(g: FiniteGroup, elems) -> bool:
    s = frozenset(elems)
    if g.identity not in s:
        return False
    return all(g.mult[x][y] in s for x in s for y in s)


def is_normal(g: FiniteGroup, h: Subgroup) -> bool:
    hs = h.element_set()
    return all(
        g.conjugate(x, y) in hs for x in range(g.order) for y in hs
    )


def left_cosets(g: FiniteGroup, h: Subgroup):
    """Blocks xH in order of least representative; reps are block minima."""
    hs = sorted(h.element_set())
    seen = [False] * g.order
    blocks = []
    for x in range(g.order):
        if seen[x]:
            continue
        block = tuple(sorted(g.mult[x][y] for y in hs))
        for z in block:
            seen[z] = True
        blocks.append(block)
    return blocks


def right_cosets(g: FiniteGroup, h: Subgroup):
    hs = sorted(h.element_set())
    seen = [False] * g.order
    blocks = []
    for x in range(g.order):
        if seen[x]:
            continue
        block = tuple(sorted(g.mult[y][x] for y in hs))
        for z in block:
            seen[z] = True
        blocks.append(block)
    return blocks


def subgroup_as_group(g: FiniteGroup, h: Subgroup):
    """Reindex a subgroup as a standalone FiniteGroup.

    Returns (group, to_parent) where to_parent[i] is the parent index of
    the i-th subgroup element (elements kept in sorted order).
    """
    elems = list(h.elements)
    pos = {x: i for i, x in enumerate(elems)}
    mult = tuple(
        tuple(pos[g.mult[x][y]] for y in elems) for x in elems
    )
    identity = pos[g.identity]
    inv = tuple(pos[g.inv[x]] for x in elems)
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels[x] for x in elems)
    return FiniteGroup(len(elems), mult, identity, inv, labels, "table"), tuple(elems)


def centre(g: FiniteGroup) -> Subgroup:
    elems = tuple(
        x
        for x in range(g.order)
        if all(g.mult[x][y] == g.mult[y][x] for y in range(g.order))
    )
    return Subgroup(elems, generating_set(g, elems))


def sylow_two_subgroup(g: FiniteGroup) -> Subgroup:
    """The set of elements of 2-power order in an abelian group."""
    if not g.is_abelian:
        raise CayleyCodesError("sylow_two_subgroup requires an abelian group")
    elems = tuple(
        x for x in range(g.order) if _is_power_of_two(g.element_orders[x])
    )
    return Subgroup(elems, generating_set(g, elems))


def _is_power_of_two(k: int) -> bool:
    return k & (k - 1) == 0


# ---------------------------------------------------------------------------
# automorphisms


def is_automorphism(g: FiniteGroup, sigma: Automorphism) -> bool:
    m = sigma.map
    if sorted(m) != list(range(g.order)):
        return False
    if m[g.identity] != g.identity:
        return False
    return all(
        m[g.mult[x][y]] == g.mult[m[x]][m[y]]
        for x in range(g.order)
        for y in range(g.order)
    )


def inner_automorphism(g: FiniteGroup, x: int) -> Automorphism:
    """Conjugation y -> x y x^-1."""
    return Automorphism(tuple(g.conjugate(x, y) for y in range(g.order)))


def is_power_automorphism(g: FiniteGroup, sigma: Automorphism) -> bool:
    """True iff sigma(x) lies in <x> for every x."""
    return all(sigma.map[x] in g.cyclic_span(x) for x in range(g.order))


def _element_words(g: FiniteGroup, gens):
    """BFS words expressing every element as a product of generators."""
    words = {g.identity: ()}
    frontier = [g.identity]
    while frontier:
        fresh = []
        for x in frontier:
            for gi, gen in enumerate(gens):
                y = g.mult[x][gen]
                if y not in words:
                    words[y] = words[x] + (gi,)
                    fresh.append(y)
        frontier = fresh
    return words


def _map_from_images(g: FiniteGroup, h: FiniteGroup, words, images):
    out = [None] * g.order
    for x, word in words.items():
        acc = h.identity
        for gi in word:
            acc = h.mult[acc][images[gi]]
        out[x] = acc
    return tuple(out)


def _is_isomorphism_map(g: FiniteGroup, h: FiniteGroup, m) -> bool:
    if sorted(m) != list(range(h.order)):
        return False
    return all(
        m[g.mult[x][y]] == h.mult[m[x]][m[y]]
        for x in range(g.order)
        for y in range(g.order)
    )


def find_isomorphism(g: FiniteGroup, h: FiniteGroup):
    """An isomorphism map from g to h by generator-image backtracking,
    or None if the groups are not isomorphic."""
    if g.order != h.order:
        return None
    if sorted(g.element_orders) != sorted(h.element_orders):
        return None
    gens = generating_set(g)
    if not gens:
        return Automorphism((h.identity,)) if h.order == 1 else None
    words = _element_words(g, gens)
    if len(words) != g.order:
        raise CayleyCodesError("generating set does not generate")
    candidates = [
        [y for y in range(h.order) if h.element_orders[y] == g.element_orders[x]]
        for x in gens
    ]
    for images in itertools.product(*candidates):
        m = _map_from_images(g, h, words, images)
        if _is_isomorphism_map(g, h, m):
            return Automorphism(m)
    return None


def all_automorphisms(
    g: FiniteGroup, max_order: int = DEFAULT_AUTOMORPHISM_BOUND
):
    """The full automorphism group, by generator-image backtracking."""
    if g.order > max_order:
        raise BoundExceededError(
            f"all_automorphisms bound exceeded: |G|={g.order} > {max_order}"
        )
    if g.order == 1:
        return [Automorphism((g.identity,))]
    gens = generating_set(g)
    words = _element_words(g, gens)
    candidates = [
        [y for y in range(g.order) if g.element_orders[y] == g.element_orders[x]]
        for x in gens
    ]
    out = []
    for images in itertools.product(*candidates):
        m = _map_from_images(g, g, words, images)
        if _is_isomorphism_map(g, g, m):
            out.append(Automorphism(m))
    out.sort(key=lambda s: s.map)
    return out
