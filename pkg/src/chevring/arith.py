"""Exact integer arithmetic underlying every other module.

All values are plain Python ``int`` (arbitrary precision), so products like
q^r - 1 never wrap.  The two dataclasses bundle the arithmetic attached to a
choice of finite field F_q and coefficient prime l, and validate their own
invariants on construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, PreconditionError

__all__ = [
    "GLParams",
    "GaloisParams",
    "galois_params",
    "gl_params",
    "is_prime",
    "l_valuation",
    "multiplicative_order",
    "prime_power_base",
]

# Strong-pseudoprime witnesses; testing against all of them is exact for
# every n < 3.317e24, far beyond 2^64 (Sorenson-Webster).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test, exact for n < 3.3e24."""
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n == w:
            return True
        if n % w == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_power_base(q: int) -> tuple[int, int]:
    """Write q = p^k with p prime and k >= 1, or raise InputError.

    Trial division up to sqrt(q); fine for the field sizes this package is
    meant for.
    """
    if q < 2:
        raise InputError(f"{q} is not a prime power")
    p = 0
    if q % 2 == 0:
        p = 2
    else:
        c = 3
        while c * c <= q:
            if q % c == 0:
                p = c
                break
            c += 2
        if p == 0:
            return q, 1  # q has no divisor up to sqrt(q), so it is prime
    n = q
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    if n != 1:
        raise InputError(f"{q} is not a prime power")
    return p, k


def l_valuation(x: int, l: int) -> tuple[int, int]:
    """Split x = l^v * cofactor with the cofactor prime to l."""
    if x < 1:
        raise InputError(f"l_valuation needs a positive integer, got {x}")
    if not is_prime(l):
        raise InputError(f"{l} is not prime")
    v = 0
    while x % l == 0:
        x //= l
        v += 1
    return v, x


def multiplicative_order(q: int, l: int) -> int:
    """Least r >= 1 with q^r = 1 mod l, for l prime not dividing q."""
    if q < 1:
        raise InputError(f"q must be positive, got {q}")
    if not is_prime(l):
        raise InputError(f"{l} is not prime")
    if q % l == 0:
        raise PreconditionError(
            f"{l} divides q = {q}: the multiplicative order of q mod {l} is undefined"
        )
    q0 = q % l
    r = 1
    x = q0
    while x != 1:
        x = x * q0 % l
        r += 1
    return r


@dataclass(frozen=True)
class GaloisParams:
    """The tuple (p, q, l, r, a, h): field F_q of characteristic p, coefficient
    prime l != p, r the multiplicative order of q mod l, and q^r - 1 = l^a * h
    with h prime to l."""

    p: int
    q: int
    l: int
    r: int
    a: int
    h: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise InputError(f"p = {self.p} is not prime")
        if not is_prime(self.l):
            raise InputError(f"l = {self.l} is not prime")
        if self.l == self.p:
            raise PreconditionError(
                f"l = p = {self.l}: the coefficient prime must differ from the field characteristic"
            )
        base, _ = prime_power_base(self.q)
        if base != self.p:
            raise InputError(f"q = {self.q} is not a power of p = {self.p}")
        if self.r != multiplicative_order(self.q, self.l):
            raise InputError(
                f"r = {self.r} is not the multiplicative order of {self.q} mod {self.l}"
            )
        if self.a < 1:
            raise InputError(f"a must be >= 1, got {self.a}")
        if self.h < 1 or self.h % self.l == 0:
            raise InputError(f"h = {self.h} must be positive and prime to l = {self.l}")
        if self.l**self.a * self.h != self.q**self.r - 1:
            raise InputError(
                f"l^a * h = {self.l}^{self.a} * {self.h} does not equal q^r - 1"
            )


def galois_params(p: int, q: int, l: int) -> GaloisParams:
    """Assemble GaloisParams from (p, q, l), computing r, a and h."""
    if not is_prime(p):
        raise InputError(f"p = {p} is not prime")
    if not is_prime(l):
        raise InputError(f"l = {l} is not prime")
    if l == p:
        raise PreconditionError(
            f"l = p = {l}: the coefficient prime must differ from the field characteristic"
        )
    base, _ = prime_power_base(q)
    if base != p:
        raise InputError(f"q = {q} is not a power of p = {p}")
    r = multiplicative_order(q, l)
    a, h = l_valuation(q**r - 1, l)
    return GaloisParams(p=p, q=q, l=l, r=r, a=a, h=h)


@dataclass(frozen=True)
class GLParams:
    """GaloisParams together with a matrix size n and the long division
    n = r*m + e, 0 <= e < r."""

    base: GaloisParams
    n: int
    m: int
    e: int

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"n must be >= 1, got {self.n}")
        r = self.base.r
        if not (0 <= self.e < r) or self.n != r * self.m + self.e:
            raise InputError(
                f"(m, e) = ({self.m}, {self.e}) is not the long division of {self.n} by {r}"
            )


def gl_params(params: GaloisParams, n: int) -> GLParams:
    """Attach a matrix size n to params, computing m = floor(n/r) and e."""
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    m, e = divmod(n, params.r)
    return GLParams(base=params, n=n, m=m, e=e)
