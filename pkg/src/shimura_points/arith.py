"""Exact integer arithmetic: primality, factorization, Kronecker and Hilbert symbols.

Everything here works on Python ints but refuses magnitudes of 2**127 or
more, so results never depend on unbounded growth.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering

INT_LIMIT = 1 << 127

# Strong-pseudoprime bases sufficient for n < 3.3 * 10**24 (Sorenson-Webster).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981

_TRIAL_LIMIT = 10**6


class ArithmeticOverflow(OverflowError):
    """Raised when an intermediate value leaves the signed 128-bit range."""


def check_range(x: int) -> int:
    if not -INT_LIMIT < x < INT_LIMIT:
        raise ArithmeticOverflow(f"|{x}| >= 2^127")
    return x


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


_SMALL_PRIMES = _small_primes(1000)
_TRIAL_PRIMES: list[int] | None = None


def _trial_primes() -> list[int]:
    global _TRIAL_PRIMES
    if _TRIAL_PRIMES is None:
        _TRIAL_PRIMES = _small_primes(_TRIAL_LIMIT)
    return _TRIAL_PRIMES


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _strong_lucas_probable_prime(n: int) -> bool:
    # Selfridge parameters: first D in 5, -7, 9, -11, ... with (D|n) = -1.
    if math.isqrt(n) ** 2 == n:
        return False
    D = 5
    while True:
        j = jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def half(x: int) -> int:
        x %= n
        return (x + n) // 2 if x % 2 else x // 2

    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = half(P * U + V), half(D * U + P * V)
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test for 2 <= n < 2**127.

    Below 3.3e24 this is Miller-Rabin on the first thirteen primes, which is
    proven exact. Above that a strong Lucas test is added (BPSW).
    """
    if n < 2:
        raise ValueError(f"is_prime requires n >= 2, got {n}")
    check_range(n)
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < _SMALL_PRIMES[-1] ** 2:
        return True
    if not all(_strong_probable_prime(n, a) for a in _MR_BASES):
        return False
    if n < _MR_DETERMINISTIC_LIMIT:
        return True
    return _strong_lucas_probable_prime(n)


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite n."""
    for c in range(1, 1000):
        y, r, q, g = 2, 1, 1, 1
        m = 128
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"Pollard rho failed to split {n}")


@dataclass(frozen=True)
class Factorization:
    value: int
    sign: int
    factors: tuple[tuple[int, int], ...]

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def reconstruct(self) -> int:
        out = self.sign
        for p, k in self.factors:
            out *= p**k
        return out


def factor(n: int) -> Factorization:
    if n == 0:
        raise ValueError("cannot factor 0")
    check_range(n)
    sign = -1 if n < 0 else 1
    m = abs(n)
    counts: dict[int, int] = {}
    for p in _trial_primes():
        if p * p > m:
            break
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    stack = [m] if m > 1 else []
    while stack:
        x = stack.pop()
        if is_prime(x):
            counts[x] = counts.get(x, 0) + 1
            continue
        d = _pollard_brent(x)
        stack.extend((d, x // d))
    return Factorization(n, sign, tuple(sorted(counts.items())))


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    if n in (1, -1):
        return True
    return all(k == 1 for _, k in factor(n).factors)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a|n) for odd positive n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"jacobi requires odd positive n, got {n}")
    a %= n
    acc = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                acc = -acc
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            acc = -acc
        a %= n
    return acc if n == 1 else 0


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n), defined for every pair except (0, 0)."""
    if a == 0 and n == 0:
        raise ValueError("kronecker(0, 0) is undefined")
    if n == 0:
        return 1 if a in (1, -1) else 0
    acc = 1
    if n < 0:
        n = -n
        if a < 0:
            acc = -acc
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            acc = -acc
    if n == 1:
        return acc
    return acc * jacobi(a, n)


@total_ordering
@dataclass(frozen=True)
class Place:
    """A place of Q: ``Place(p)`` for a prime p, ``Place(None)`` for infinity."""

    prime: int | None = None

    def __post_init__(self):
        if self.prime is not None and (self.prime < 2 or not is_prime(self.prime)):
            raise ValueError(f"{self.prime} is not prime")

    @property
    def is_infinite(self) -> bool:
        return self.prime is None

    def __lt__(self, other: "Place") -> bool:
        # finite places first, ordered by prime; infinity last
        if self.prime is None:
            return False
        if other.prime is None:
            return True
        return self.prime < other.prime

    def __str__(self) -> str:
        return "inf" if self.prime is None else str(self.prime)


INFINITY = Place(None)


def _split_valuation(x: int, p: int) -> tuple[int, int]:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v, x


def hilbert(a: int, b: int, v: Place) -> int:
    """Hilbert symbol (a, b)_v: +1 iff (a, b / Q) splits over Q_v."""
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    check_range(a)
    check_range(b)
    if v.is_infinite:
        return -1 if a < 0 and b < 0 else 1
    p = v.prime
    alpha, u = _split_valuation(a, p)
    beta, w = _split_valuation(b, p)
    if p != 2:
        sign = -1 if (alpha * beta % 2 and p % 4 == 3) else 1
        if beta % 2:
            sign *= kronecker(u, p)
        if alpha % 2:
            sign *= kronecker(w, p)
        return sign
    # p = 2: exponent e(u)e(w) + alpha*omega(w) + beta*omega(u),
    # e(x) = (x-1)/2 mod 2, omega(x) = (x^2-1)/8 mod 2
    eps_u = (u - 1) // 2 % 2
    eps_w = (w - 1) // 2 % 2
    om_u = (u * u - 1) // 8 % 2
    om_w = (w * w - 1) // 8 % 2
    exponent = eps_u * eps_w + alpha * om_w + beta * om_u
    return -1 if exponent % 2 else 1


def relevant_places(a: int, b: int) -> list[Place]:
    primes = set(factor(2 * a).primes()) | set(factor(b).primes())
    return [Place(p) for p in sorted(primes)] + [INFINITY]


def ramified_places(a: int, b: int) -> list[Place]:
    """Places where (a, b / Q) is a division algebra, sorted (infinity last)."""
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    return [v for v in relevant_places(a, b) if hilbert(a, b, v) == -1]
