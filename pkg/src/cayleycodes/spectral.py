"""Characters of finite abelian groups and exact cyclotomic tiling tests.

All character values live in a single cyclotomic ring: a character value is
a power of zeta_m with m = |G| (each factor root zeta_{m_j} embeds as
zeta_m^(m/m_j)).  Sums of character values are integer coefficient vectors
modulo x^m - 1, and the zero test is exact: a sum vanishes iff the m-th
cyclotomic polynomial divides it.  Floating point would make the
equivalence tests unfalsifiable.
"""

from __future__ import annotations

import cmath
import functools
from dataclasses import dataclass

from .basis import abelian_basis
from .cayley import group_ring_indicator, group_ring_product
from .errors import CayleyCodesError
from .groups import Automorphism, FiniteGroup, is_power_automorphism


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (constant first) of the m-th cyclotomic polynomial.

    Computed by exact integer division of x^m - 1 by the cyclotomic
    polynomials of the proper divisors of m.
    """
    if m < 1:
        raise CayleyCodesError("cyclotomic index must be positive")
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_div_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _poly_div_exact(num, den):
    """Exact division of integer polynomials (den monic up to sign)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        q, r = divmod(num[i + len(den) - 1], lead)
        if r:
            raise CayleyCodesError("non-exact polynomial division")
        out[i] = q
        for j, c in enumerate(den):
            num[i + j] -= q * c
    if any(num):
        raise CayleyCodesError("non-exact polynomial division")
    return out


def _poly_rem(num, den):
    """Remainder of integer polynomial division by a monic divisor."""
    num = list(num)
    dn = len(den) - 1
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    return num[:dn]


@dataclass(frozen=True)
class CyclotomicSum:
    """An integer combination sum_j c_j zeta_m^j, stored mod x^m - 1."""

    m: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.m:
            raise CayleyCodesError("coefficient vector must have length m")

    def __add__(self, other: "CyclotomicSum") -> "CyclotomicSum":
        self._check(other)
        return CyclotomicSum(
            self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other: "CyclotomicSum") -> "CyclotomicSum":
        self._check(other)
        out = [0] * self.m
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[(i + j) % self.m] += a * b
        return CyclotomicSum(self.m, tuple(out))

    def _check(self, other):
        if self.m != other.m:
            raise CayleyCodesError("mixed cyclotomic orders")

    def is_zero(self) -> bool:
        """Exact vanishing test: Phi_m must divide the coefficient vector."""
        if not any(self.coeffs):
            return True
        rem = _poly_rem(list(self.coeffs), list(cyclotomic_polynomial(self.m)))
        return not any(rem)

    def as_complex(self) -> complex:
        """Floating-point value, for sanity cross-checks only."""
        return sum(
            c * cmath.exp(2j * cmath.pi * j / self.m)
            for j, c in enumerate(self.coeffs)
            if c
        )

    @staticmethod
    def zero(m: int) -> "CyclotomicSum":
        return CyclotomicSum(m, (0,) * m)

    @staticmethod
    def integer(m: int, k: int) -> "CyclotomicSum":
        return CyclotomicSum(m, (k,) + (0,) * (m - 1))


@dataclass(frozen=True)
class Character:
    """An irreducible character of an abelian group.

    ``exponents`` are taken relative to a fixed decomposition with factor
    orders ``orders``; ``value_exponents`` precomputes, for every group
    element, the exponent k with value zeta_m^k (m = group order).
    """

    exponents: tuple[int, ...]
    orders: tuple[int, ...]
    m: int
    value_exponents: tuple[int, ...]

    @property
    def is_trivial(self) -> bool:
        return all(n == 0 for n in self.exponents)

    def value(self, g: int) -> CyclotomicSum:
        coeffs = [0] * self.m
        coeffs[self.value_exponents[g]] = 1
        return CyclotomicSum(self.m, tuple(coeffs))


def _decomposition(g: FiniteGroup):
    if not g.is_abelian:
        raise CayleyCodesError("characters require an abelian group")
    if g.decomposition is not None and g.kind in ("cyclic", "abelian-product"):
        # canonical factors are the stored ones; recover their generators
        strides = []
        acc = g.order
        for m in g.decomposition:
            acc //= m
            strides.append(acc)
        gens = tuple(strides)
        orders = g.decomposition
        exps = {}
        for x in range(g.order):
            exps[x] = tuple((x // s) % m for s, m in zip(strides, orders))
        return gens, orders, exps
    return abelian_basis(g)


def characters(g: FiniteGroup):
    """All |G| characters, trivial first, then sorted by exponent tuple."""
    _, orders, exps = _decomposition(g)
    m = g.order
    out = []
    tuples = sorted(_tuples(orders))
    for nt in tuples:
        vals = []
        for x in range(g.order):
            ax = exps[x]
            k = sum(n * a * (m // o) for n, a, o in zip(nt, ax, orders)) % m
            vals.append(k)
        out.append(Character(nt, orders, m, tuple(vals)))
    out.sort(key=lambda c: (not c.is_trivial, c.exponents))
    return out


def _tuples(orders):
    import itertools

    return itertools.product(*(range(o) for o in orders))


def char_sum(rho: Character, subset) -> CyclotomicSum:
    """The exact cyclotomic sum of the character over a subset."""
    coeffs = [0] * rho.m
    for x in subset:
        coeffs[rho.value_exponents[x]] += 1
    return CyclotomicSum(rho.m, tuple(coeffs))


def spectral_tiling_check(g: FiniteGroup, a, b) -> bool:
    """Fourier form of the tiling equation: |A||B| = |G| at the trivial
    character, and the product of character sums vanishes exactly at every
    nontrivial character."""
    a = set(a)
    b = set(b)
    if len(a) * len(b) != g.order:
        return False
    for rho in characters(g):
        if rho.is_trivial:
            continue
        if not (char_sum(rho, a) * char_sum(rho, b)).is_zero():
            return False
    return True


def group_ring_tiling_check(g: FiniteGroup, a, b) -> bool:
    """Convolution form: indicator(A) * indicator(B) is the all-ones vector."""
    prod = group_ring_product(
        g, group_ring_indicator(g, a), group_ring_indicator(g, b)
    )
    return prod == [1] * g.order


def verify_lemma_equivalence(g: FiniteGroup, a, b) -> bool:
    """Both tiling tests must agree; a discrepancy is a defect, not a result."""
    spectral = spectral_tiling_check(g, a, b)
    ring = group_ring_tiling_check(g, a, b)
    if spectral != ring:
        raise CayleyCodesError(
            f"tiling-check discrepancy: spectral={spectral} ring={ring} "
            f"A={sorted(a)} B={sorted(b)}"
        )
    return spectral


def power_automorphism_tiling_transport(
    g: FiniteGroup, a, b, sigma: Automorphism
) -> bool:
    """Given a tiling equation for (A, B) and a power automorphism, check
    that (A^sigma, B) still satisfies it.  The precondition is enforced;
    the conclusion is checked, not assumed."""
    if not g.is_abelian:
        raise CayleyCodesError("transport check requires an abelian group")
    if not is_power_automorphism(g, sigma):
        raise CayleyCodesError("transport requires a power automorphism")
    if not group_ring_tiling_check(g, a, b):
        raise CayleyCodesError("precondition fails: (A, B) is not a tiling pair")
    image = [sigma.map[x] for x in a]
    return group_ring_tiling_check(g, image, b)
