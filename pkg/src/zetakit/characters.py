"""Exact Dirichlet characters via exponent vectors on generators of (Z/q)*.

A character mod q is stored as its exponent tuple on a fixed generator set
coming from the CRT decomposition of (Z/q)*.  Values are exact roots of
unity, kept as rationals r with chi(a) = exp(2*pi*i*r), so conductor,
order and splitting logic never touch floating point.
"""

from __future__ import annotations

import cmath
import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np


def factorize(n: int) -> list[tuple[int, int]]:
    """Trial-division factorization, fine at desk scale."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def _primitive_root_mod_pk(p: int, k: int) -> int:
    """Smallest primitive root mod p, lifted so it generates mod p**k."""
    phi = p - 1
    qs = [f for f, _ in factorize(phi)]
    g = 2
    while any(pow(g, phi // f, p) == 1 for f in qs):
        g += 1
    if k > 1 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


@dataclass(frozen=True)
class UnitGroup:
    """CRT structure of (Z/q)*: cyclic factors, generators, discrete logs."""

    modulus: int
    orders: tuple[int, ...]          # cyclic factor orders s_j
    generators: tuple[int, ...]      # g_j mod q, one per factor
    dlog: dict                       # unit a mod q -> exponent tuple

    def __hash__(self):
        return hash((self.modulus, self.orders, self.generators))


@functools.lru_cache(maxsize=None)
def unit_group(q: int) -> UnitGroup:
    if q < 1:
        raise ValueError("modulus must be positive")
    parts = []          # (component modulus, local generator, order)
    for p, e in factorize(q):
        pe = p**e
        if p == 2:
            if e == 1:
                continue
            if e == 2:
                parts.append((pe, 3, 2))
            else:
                # (Z/2^e)* = <-1> x <5>
                parts.append((pe, pe - 1, 2))
                parts.append((pe, 5, 2 ** (e - 2)))
        else:
            g = _primitive_root_mod_pk(p, e)
            parts.append((pe, g, (p - 1) * p ** (e - 1)))
    # lift each local generator to mod q (1 at the other components)
    gens, orders = [], []
    for pe, g, s in parts:
        rest = q // pe
        if rest == 1:
            lifted = g % q
        else:
            inv = pow(pe, -1, rest)
            lifted = (g + pe * ((1 - g) * inv % rest)) % q
        gens.append(lifted)
        orders.append(s)
    dlog = {}
    for expo in itertools.product(*[range(s) for s in orders]):
        a = 1
        for g, k in zip(gens, expo):
            a = a * pow(g, k, q) % q
        dlog[a] = expo
    if not orders:
        dlog = {1 % q: ()} if q > 1 else {0: ()}
    return UnitGroup(q, tuple(orders), tuple(gens), dlog)


@dataclass(frozen=True)
class DirichletCharacter:
    modulus: int
    generator_exponents: tuple[int, ...]
    order: int
    conductor: int
    parity: str  # 'even' | 'odd'

    def __repr__(self):
        return (f"DirichletCharacter(mod {self.modulus}, exp "
                f"{self.generator_exponents}, order {self.order}, "
                f"cond {self.conductor}, {self.parity})")


def _value_fraction(q: int, exponents: tuple[int, ...], a: int) -> Fraction | None:
    """chi(a) as r with chi(a)=e^(2 pi i r), or None when gcd(a,q)>1."""
    if q == 1:
        return Fraction(0)
    a %= q
    if math.gcd(a, q) != 1:
        return None
    grp = unit_group(q)
    t = grp.dlog[a]
    r = Fraction(0)
    for c, k, s in zip(exponents, t, grp.orders):
        r += Fraction(c * k, s)
    return r % 1


def _conductor(q: int, exponents: tuple[int, ...]) -> int:
    """Smallest f | q with chi trivial on the units congruent to 1 mod f."""
    divisors = sorted(d for d in range(1, q + 1) if q % d == 0)
    for f in divisors:
        ok = True
        for a in range(1 + f, q + 1, f):
            if math.gcd(a, q) != 1:
                continue
            if _value_fraction(q, exponents, a) != 0:
                ok = False
                break
        if ok:
            return f
    return q


def _build(q: int, exponents: tuple[int, ...]) -> DirichletCharacter:
    grp = unit_group(q)
    order = 1
    for c, s in zip(exponents, grp.orders):
        order = math.lcm(order, s // math.gcd(s, c))
    conductor = _conductor(q, exponents)
    if q <= 2:
        parity = "even"
    else:
        r = _value_fraction(q, exponents, q - 1)
        parity = "even" if r == 0 else "odd"
    return DirichletCharacter(q, exponents, order, conductor, parity)


@functools.lru_cache(maxsize=None)
def enumerate_characters(q: int) -> tuple[DirichletCharacter, ...]:
    """All phi(q) characters mod q, lexicographic in exponent vectors."""
    grp = unit_group(q)
    chars = tuple(
        _build(q, expo)
        for expo in itertools.product(*[range(s) for s in grp.orders])
    )
    return chars if chars else (_build(q, ()),)


def principal_character(q: int) -> DirichletCharacter:
    return enumerate_characters(q)[0]


def character_value_exact(chi: DirichletCharacter, a: int) -> Fraction | None:
    """Exact value as a fraction of a full turn; None encodes 0."""
    return _value_fraction(chi.modulus, chi.generator_exponents, a)


def character_value(chi: DirichletCharacter, a: int) -> complex:
    r = character_value_exact(chi, a)
    if r is None:
        return 0j
    if r == 0:
        return 1 + 0j
    if 2 * r == 1:
        return -1 + 0j
    return cmath.exp(2j * cmath.pi * float(r))


def character_value_mp(chi: DirichletCharacter, a: int, mp=None):
    """High-precision value under the caller's mpmath context."""
    import mpmath

    ctx = mp or mpmath.mp
    r = character_value_exact(chi, a)
    if r is None:
        return ctx.mpc(0)
    return ctx.expjpi(2 * ctx.mpf(r.numerator) / r.denominator)


@functools.lru_cache(maxsize=None)
def exact_values(chi: DirichletCharacter) -> tuple:
    """chi(a) for a = 0..q-1 as turn fractions (None where zero)."""
    q = chi.modulus
    return tuple(character_value_exact(chi, a) for a in range(q))


@functools.lru_cache(maxsize=None)
def values_vector(chi: DirichletCharacter) -> np.ndarray:
    """chi(a), a = 0..q-1, as a complex128 array (read-only)."""
    q = chi.modulus
    out = np.zeros(q if q > 1 else 1, dtype=np.complex128)
    for a, r in enumerate(exact_values(chi)):
        if r is not None:
            out[a] = cmath.exp(2j * cmath.pi * float(r))
    out.flags.writeable = False
    return out


def conductor_of(chi: DirichletCharacter) -> int:
    return chi.conductor


def is_principal(chi: DirichletCharacter) -> bool:
    return chi.order == 1


def is_real(chi: DirichletCharacter) -> bool:
    return chi.order <= 2


def conjugate(chi: DirichletCharacter) -> DirichletCharacter:
    grp = unit_group(chi.modulus)
    expo = tuple((-c) % s for c, s in zip(chi.generator_exponents, grp.orders))
    return DirichletCharacter(chi.modulus, expo, chi.order, chi.conductor,
                              chi.parity)


def _from_generator_values(q: int, vals: list[Fraction]) -> DirichletCharacter:
    grp = unit_group(q)
    expo = []
    for r, s in zip(vals, grp.orders):
        c = r * s
        if c.denominator != 1:
            raise ValueError("values do not define a character mod %d" % q)
        expo.append(int(c) % s)
    return _build(q, tuple(expo))


def multiply(chi: DirichletCharacter, psi: DirichletCharacter) -> DirichletCharacter:
    """Product character, defined mod lcm of the two moduli."""
    m = math.lcm(chi.modulus, psi.modulus)
    grp = unit_group(m)
    vals = []
    for g in grp.generators:
        r1 = character_value_exact(chi, g % chi.modulus) if chi.modulus > 1 else Fraction(0)
        r2 = character_value_exact(psi, g % psi.modulus) if psi.modulus > 1 else Fraction(0)
        if r1 is None or r2 is None:
            raise ValueError("generator not coprime to a factor modulus")
        vals.append((r1 + r2) % 1)
    return _from_generator_values(m, vals)


@functools.lru_cache(maxsize=None)
def to_primitive(chi: DirichletCharacter) -> DirichletCharacter:
    """The primitive character mod chi.conductor inducing chi."""
    f = chi.conductor
    if f == chi.modulus:
        return chi
    gens = unit_group(chi.modulus).generators
    for cand in enumerate_characters(f):
        if cand.conductor != f:
            continue
        if all(character_value_exact(cand, g % f) == character_value_exact(chi, g)
               for g in gens):
            return cand
    raise RuntimeError("no inducing character found (should not happen)")


def _jacobi(a: int, m: int) -> int:
    """Jacobi symbol (a|m) for odd positive m."""
    a %= m
    sign = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                sign = -sign
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            sign = -sign
        a %= m
    return sign if m == 1 else 0


def kronecker_symbol(d: int, n: int) -> int:
    """Kronecker symbol (d|n) for positive n, completely multiplicative in n."""
    if n <= 0:
        raise ValueError("n must be positive")
    result = 1
    while n % 2 == 0:
        if d % 2 == 0:
            return 0
        result *= 1 if d % 8 in (1, 7) else -1
        n //= 2
    return result * _jacobi(d, n) if n > 1 else result
