"""Frobenius trace sets C(N, e), their neighbourhoods D(N, e), and prime supports.

``C(N, e)`` collects alpha**e + conj(alpha)**e over the roots alpha of
T**2 + s*T + N with s**2 <= 4N. ``D(N, e)`` adds the shifted values
a +- N**(e/2), a +- 2*N**(e/2) and a**2 - 3*N**e for each a in C(N, e).
"""
from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

from .arith import check_range, factor


@dataclass(frozen=True)
class TraceParams:
    N: int
    e: int

    def __post_init__(self):
        if self.N < 2:
            raise ValueError(f"N must be >= 2, got {self.N}")
        if self.e < 1:
            raise ValueError(f"e must be >= 1, got {self.e}")


@dataclass(frozen=True)
class TraceData:
    params: TraceParams
    c_set: tuple[int, ...]
    d_set: tuple[int, ...] | None
    p_set: tuple[int, ...] | None


def _s_range(N: int) -> range:
    bound = math.isqrt(4 * N)
    return range(-bound, bound + 1)


def power_trace(s: int, N: int, e: int) -> int:
    """alpha**e + conj(alpha)**e for the roots of T**2 + s*T + N."""
    prev, cur = 2, -s
    if e == 0:
        return prev
    for _ in range(e - 1):
        prev, cur = cur, check_range(-s * cur - N * prev)
    return cur


@lru_cache(maxsize=4096)
def trace_set(N: int, e: int) -> tuple[int, ...]:
    TraceParams(N, e)
    return tuple(sorted({power_trace(s, N, e) for s in _s_range(N)}))


@lru_cache(maxsize=4096)
def d_set(N: int, e: int) -> tuple[int, ...]:
    TraceParams(N, e)
    if e % 2:
        raise ValueError(f"non-integral D requested: e = {e} is odd")
    half = check_range(N ** (e // 2))
    full = check_range(N**e)
    check_range(4 * full)
    out: set[int] = set()
    for a in trace_set(N, e):
        out.update(_d_offsets(a, half, full))
    return tuple(sorted(out))


def prime_support(values: Iterable[int]) -> tuple[int, ...]:
    primes: set[int] = set()
    for x in values:
        if x not in (0, 1, -1):
            primes.update(factor(x).primes())
    return tuple(sorted(primes))


def trace_data(N: int, e: int) -> TraceData:
    params = TraceParams(N, e)
    c = trace_set(N, e)
    if e % 2:
        return TraceData(params, c, None, None)
    d = d_set(N, e)
    return TraceData(params, c, d, prime_support(d))


def _d_offsets(a: int, half: int, full: int) -> tuple[int, ...]:
    return (a, a + half, a - half, a + 2 * half, a - 2 * half, a * a - 3 * full)


def divides_some(p: int, N: int, e: int) -> bool:
    """True iff the prime p divides some nonzero element of D(N, e).

    t_e(s) mod p depends only on s mod p, so once the s-range covers every
    residue class only p classes need to be inspected; an exact nonzero
    witness is then located inside a class that hits 0 mod p.
    """
    TraceParams(N, e)
    if e % 2:
        raise ValueError(f"non-integral D requested: e = {e} is odd")
    half = check_range(N ** (e // 2))
    full = check_range(N**e)
    check_range(4 * full)
    bound = math.isqrt(4 * N)
    if 2 * bound + 1 <= 4 * p:
        return any(x and x % p == 0 for x in d_set(N, e))
    half_p, full_p = half % p, full % p
    for r in range(p):
        t = power_trace(r, N % p, e) % p
        if all(x % p for x in _d_offsets(t, half_p, full_p)):
            continue
        for s in range(-bound + (r + bound) % p, bound + 1, p):
            a = power_trace(s, N, e)
            if any(x and x % p == 0 for x in _d_offsets(a, half, full)):
                return True
    return False
