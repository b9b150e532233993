"""Indefinite quaternion division algebras over Q, stored as their ramified primes."""
from __future__ import annotations

from dataclasses import dataclass, field

from .abfield import AbelianField, PrimeDecomposition, decompose, quadratic_field
from .arith import factor, is_prime, ramified_places


@dataclass(frozen=True)
class QuaternionAlgebra:
    ramified_primes: tuple[int, ...]
    indefinite: bool = True

    def __post_init__(self):
        ps = self.ramified_primes
        if not ps:
            raise ValueError("a division algebra ramifies somewhere")
        if list(ps) != sorted(set(ps)) or not all(p >= 2 and is_prime(p) for p in ps):
            raise ValueError(f"ramified primes must be distinct sorted primes: {ps}")
        if not self.indefinite or len(ps) % 2:
            raise ValueError("only indefinite algebras (even number of ramified primes)")

    @property
    def discriminant(self) -> int:
        d = 1
        for p in self.ramified_primes:
            d *= p
        return d


@dataclass(frozen=True)
class SymbolReport:
    """Outcome of a symbol presentation that is not an indefinite division algebra."""

    a: int
    b: int
    kind: str  # "split" or "definite"
    ramified: tuple[str, ...]


def from_discriminant(d: int) -> QuaternionAlgebra:
    if d == 1:
        raise ValueError("d(B) = 1 is the split algebra M_2(Q)")
    if d < 1:
        raise ValueError(f"discriminant must be positive, got {d}")
    fac = factor(d)
    if any(k > 1 for _, k in fac.factors):
        raise ValueError(f"discriminant {d} is not squarefree")
    if len(fac.factors) % 2:
        raise ValueError(f"discriminant {d} has an odd number of prime factors (definite)")
    return QuaternionAlgebra(fac.primes())


def is_indefinite_discriminant(d: int) -> bool:
    if d < 2:
        return False
    fac = factor(d)
    return all(k == 1 for _, k in fac.factors) and len(fac.factors) % 2 == 0


def from_symbol(a: int, b: int) -> QuaternionAlgebra | SymbolReport:
    places = ramified_places(a, b)
    labels = tuple(str(v) for v in places)
    if not places:
        return SymbolReport(a, b, "split", labels)
    if any(v.is_infinite for v in places):
        return SymbolReport(a, b, "definite", labels)
    return QuaternionAlgebra(tuple(v.prime for v in places))


@dataclass(frozen=True)
class SplittingData:
    splits: bool
    local: tuple[PrimeDecomposition, ...]


def splits_over(B: QuaternionAlgebra, k: AbelianField) -> SplittingData:
    """B tensor k is a matrix algebra iff every ramified prime has even local degree in k."""
    local = tuple(decompose(k, p) for p in B.ramified_primes)
    return SplittingData(all(d.local_degree % 2 == 0 for d in local), local)


def class_b_fields(q: int) -> tuple[int, ...]:
    """The t with Q(sqrt(-t)) required to stay non-split for membership in B(q)."""
    return (1, 2) if q == 2 else (q,)


@dataclass(frozen=True)
class ClassBEvidence:
    q: int
    member: bool
    # (t, witness prime or None) per required field Q(sqrt(-t))
    witnesses: tuple[tuple[int, int | None], ...] = field(default=())


def in_class_b(B: QuaternionAlgebra, q: int) -> ClassBEvidence:
    if q < 2 or not is_prime(q):
        raise ValueError(f"{q} is not prime")
    witnesses = []
    for t in class_b_fields(q):
        K = quadratic_field(-t)
        witness = next((p for p in B.ramified_primes if decompose(K, p).g == 2), None)
        witnesses.append((t, witness))
    return ClassBEvidence(q, all(w is not None for _, w in witnesses), tuple(witnesses))


def in_class_b_via_splitting(B: QuaternionAlgebra, q: int) -> bool:
    return not any(splits_over(B, quadratic_field(-t)).splits for t in class_b_fields(q))
