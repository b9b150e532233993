"""Abelian number fields as fixed fields inside cyclotomic fields.

A field is a pair ``(m, H)``: the subfield of Q(zeta_m) fixed by the
subgroup H of (Z/m)^x. Splitting of rational primes reduces to arithmetic
in the quotient (Z/m)^x / H.
"""
from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass

from .arith import factor, is_prime, is_squarefree, kronecker

MAX_MODULUS = 10**6


def units(m: int) -> list[int]:
    # residues are reduced mod m, so for m = 1 the unit group is {0}
    return [x for x in range(m) if math.gcd(x, m) == 1]


def totient(m: int) -> int:
    out = m
    for p in factor(m).primes() if m > 1 else ():
        out = out // p * (p - 1)
    return out


def _closure(m: int, gens: Iterable[int]) -> frozenset[int]:
    group = {1 % m}
    frontier = [1 % m]
    gens = [g % m for g in gens]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x * g % m
            if y not in group:
                group.add(y)
                frontier.append(y)
    return frozenset(group)


def _generators(m: int, H: Iterable[int]) -> list[int]:
    """A generating set for the span of H, picked greedily from H."""
    gens: list[int] = []
    span = {1 % m}
    for h in sorted(H):
        if h not in span:
            gens.append(h)
            span = set(_closure(m, gens))
    return gens


@dataclass(frozen=True)
class AbelianField:
    modulus: int
    subgroup: tuple[int, ...]

    def __post_init__(self):
        m = self.modulus
        if not 1 <= m <= MAX_MODULUS:
            raise ValueError(f"modulus must be in [1, {MAX_MODULUS}], got {m}")
        H = set(self.subgroup)
        if 1 % m not in H:
            raise ValueError("subgroup must contain 1")
        for h in H:
            if not 0 <= h < m or math.gcd(h, m) != 1:
                raise ValueError(f"{h} is not a reduced unit mod {m}")
        gens = _generators(m, H)
        if any(x * g % m not in H for g in gens for x in H):
            raise ValueError("subgroup is not closed under multiplication")
        if tuple(sorted(H)) != self.subgroup:
            object.__setattr__(self, "subgroup", tuple(sorted(H)))

    @classmethod
    def from_subgroup(cls, m: int, H: Iterable[int]) -> "AbelianField":
        return cls(m, tuple(sorted({h % m for h in H})))

    @property
    def degree(self) -> int:
        return totient(self.modulus) // len(self.subgroup)

    def lift(self, m: int) -> frozenset[int]:
        """Preimage of H in (Z/m)^x, for m a multiple of the modulus."""
        if m % self.modulus:
            raise ValueError(f"{m} is not a multiple of {self.modulus}")
        H = set(self.subgroup)
        return frozenset(x for x in units(m) if x % self.modulus in H)


RATIONALS = AbelianField(1, (0,))


@dataclass(frozen=True)
class PrimeDecomposition:
    p: int
    e: int
    f: int
    g: int

    @property
    def local_degree(self) -> int:
        return self.e * self.f


def quadratic_field(d: int) -> AbelianField:
    if d in (0, 1):
        raise ValueError(f"d = {d} does not define a quadratic field")
    if not is_squarefree(d):
        raise ValueError(f"d = {d} is not squarefree")
    disc = d if d % 4 == 1 else 4 * d
    m = abs(disc)
    return AbelianField(m, tuple(x for x in units(m) if kronecker(disc, x) == 1))


def cyclotomic_subfield(m: int, gens: Iterable[int]) -> AbelianField:
    """Fixed field of the subgroup of (Z/m)^x generated by ``gens``."""
    gens = list(gens)
    for g in gens:
        if math.gcd(g, m) != 1:
            raise ValueError(f"generator {g} is not coprime to {m}")
    return AbelianField(m, tuple(sorted(_closure(m, gens))))


def compositum(k1: AbelianField, k2: AbelianField) -> AbelianField:
    m = math.lcm(k1.modulus, k2.modulus)
    if m > MAX_MODULUS:
        raise ValueError(f"compositum modulus {m} exceeds {MAX_MODULUS}")
    H = k1.lift(m) & k2.lift(m)
    return AbelianField(m, tuple(sorted(H)))


def degree(k: AbelianField) -> int:
    return k.degree


def has_real_place(k: AbelianField) -> bool:
    # complex conjugation is -1 mod m; abelian fields are totally real or totally imaginary
    return (-1) % k.modulus in k.subgroup


def is_subfield(F: AbelianField, k: AbelianField) -> bool:
    m = math.lcm(F.modulus, k.modulus)
    return k.lift(m) <= F.lift(m)


def same_field(k1: AbelianField, k2: AbelianField) -> bool:
    return is_subfield(k1, k2) and is_subfield(k2, k1)


def _multiplicative_order_mod(x: int, m: int, H: frozenset[int]) -> int:
    """Smallest j >= 1 with x**j in H, working mod m."""
    y, j = x % m, 1
    while y not in H:
        y = y * x % m
        j += 1
    return j


def decompose(k: AbelianField, p: int) -> PrimeDecomposition:
    """Ramification index, residue degree and number of primes above p."""
    if p < 2 or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    m = k.modulus
    pa = 1
    m_rest = m
    while m_rest % p == 0:
        m_rest //= p
        pa *= p
    # inertia: units congruent to 1 mod m_rest; its image in (Z/m)^x / H has
    # order |U_p| / |U_p meet H|
    inertia_in_H = sum(1 for h in k.subgroup if h % m_rest == 1 % m_rest)
    e = totient(pa) // inertia_in_H
    # Frobenius order in (Z/m)^x / (U_p H); membership in U_p H is decided mod m_rest
    H_rest = frozenset(h % m_rest for h in k.subgroup)
    f = _multiplicative_order_mod(p, m_rest, H_rest)
    # decomposition group is the preimage of <H_rest, p> in (Z/m_rest)^x
    g = totient(m_rest) // (len(H_rest) * f)
    n = k.degree
    if e * f * g != n:
        raise ArithmeticError(f"e*f*g != degree for {k} at {p}: {e}*{f}*{g} != {n}")
    return PrimeDecomposition(p, e, f, g)
