"""Exact integer arithmetic helpers.

Every quantity in this package is an exact integer or an exact fraction;
no floating point is used in any comparison of group orders, hook
products, or class-number bounds.  Python ints are arbitrary precision,
so the only work here is the number theory: primality, p-adic
valuations, and the factorial valuation identity used to bound how large
an alternating group a given prime power can sit inside.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial as _factorial, isqrt


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test.

    The primes handled here are characteristics of finite fields and
    never exceed a few thousand, so trial division is the honest tool.
    """
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d <= isqrt(n):
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimePower:
    """A field size q = p**k with p prime and k >= 1."""

    p: int
    k: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.k < 1:
            raise ValueError(f"k = {self.k} must be >= 1")

    @property
    def q(self) -> int:
        return self.p ** self.k

    def __str__(self) -> str:
        return str(self.q)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    return _factorial(n)


def divides(a: int, b: int) -> bool:
    """True iff a divides b.  a must be positive."""
    if a <= 0:
        raise ValueError(f"divisor must be positive, got {a}")
    return b % a == 0


def valuation(n: int, p: int) -> int:
    """Largest e with p**e dividing n.  n must be nonzero."""
    if n == 0:
        raise ValueError("valuation of zero is undefined")
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def factorial_valuation(n: int, p: int) -> int:
    """v_p(n!) by the digit-sum free form of Legendre's identity.

    Sums floor(n / p**i) without materialising n! itself, so it stays
    cheap for the n in the tens of thousands that the sweep cutoff
    certificates touch.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if not is_prime(p):
        raise ValueError(f"p = {p} must be prime")
    total = 0
    power = p
    while power <= n:
        total += n // power
        power *= p
    return total


def factor(n: int) -> list[tuple[int, int]]:
    """Prime factorisation of n >= 1 as (prime, exponent) pairs, ascending."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out: list[tuple[int, int]] = []
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


def format_factored(n: int) -> str:
    """Render n >= 1 as a compact prime-power product, e.g. 2^6·3^2·5."""
    if n == 1:
        return "1"
    parts = []
    for p, e in factor(n):
        parts.append(str(p) if e == 1 else f"{p}^{e}")
    return "·".join(parts)
