"""Small number-theory helpers for group orders (all inputs are tiny)."""

from __future__ import annotations

from math import gcd


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n in ascending order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def factorization(n: int) -> dict[int, int]:
    """Prime -> multiplicity map of n."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def p_prime_part(n: int, p: int) -> int:
    """n divided by its p-part."""
    return n // p_part(n, p)


def is_prime_power(n: int) -> int | None:
    """Return p if n is a nontrivial power of the prime p, else None (n=1 -> None)."""
    if n < 2:
        return None
    ps = prime_factors(n)
    return ps[0] if len(ps) == 1 else None


def is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factorization(n).values())


def smallest_primitive_root(p: int) -> int:
    """Smallest primitive root mod the prime p (p >= 2)."""
    if p == 2:
        return 1
    for r in range(2, p):
        seen = 1
        x = r
        order = 1
        while x != 1:
            x = x * r % p
            order += 1
        if order == p - 1:
            return r
    raise ValueError(f"no primitive root mod {p} (p not prime?)")


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out
