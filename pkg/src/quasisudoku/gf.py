"""Small finite fields GF(p^d) as explicit addition/multiplication tables.

Element ``i`` encodes the polynomial whose coefficients are the base-``p``
digits of ``i``, lowest degree first (so for GF(4), 2 is ``x`` and 3 is
``x + 1``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotPrimePower, UnsupportedOrder

# Monic irreducible polynomials, coefficients lowest degree first.
IRREDUCIBLE = {
    4: (2, (1, 1, 1)),  # x^2 + x + 1
    8: (2, (1, 1, 0, 1)),  # x^3 + x + 1
    9: (3, (1, 0, 1)),  # x^2 + 1
    16: (2, (1, 1, 0, 0, 1)),  # x^4 + x + 1
    25: (5, (2, 0, 1)),  # x^2 + 2
    27: (3, (1, 2, 0, 1)),  # x^3 + 2x + 1
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, d)`` with ``q == p**d``; raise NotPrimePower otherwise."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    d, r = 0, q
    while r % p == 0:
        r //= p
        d += 1
    if r != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, d


def _digits(i: int, p: int, d: int) -> list[int]:
    out = []
    for _ in range(d):
        out.append(i % p)
        i //= p
    return out


def _from_digits(coeffs, p: int) -> int:
    return sum(int(c) * p**k for k, c in enumerate(coeffs))


def _poly_mulmod(a, b, modulus, p):
    d = len(modulus) - 1
    prod = [0] * (2 * d - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    # reduce from the top using the monic modulus
    for k in range(len(prod) - 1, d - 1, -1):
        c = prod[k]
        if c:
            for j, mc in enumerate(modulus):
                prod[k - d + j] = (prod[k - d + j] - c * mc) % p
    return prod[:d]


@dataclass(frozen=True)
class GaloisField:
    p: int
    d: int
    add: np.ndarray = field(repr=False, compare=False)
    mul: np.ndarray = field(repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.p**self.d

    @classmethod
    def of_order(cls, q: int) -> GaloisField:
        p, d = prime_power(q)
        if d == 1:
            r = np.arange(p)
            add = (r[:, None] + r[None, :]) % p
            mul = (r[:, None] * r[None, :]) % p
        else:
            if q not in IRREDUCIBLE:
                raise UnsupportedOrder(
                    f"no bundled irreducible polynomial for GF({q}); "
                    f"supported prime powers: {sorted(IRREDUCIBLE)}"
                )
            _, modulus = IRREDUCIBLE[q]
            digits = [_digits(i, p, d) for i in range(q)]
            add = np.empty((q, q), dtype=np.int64)
            mul = np.empty((q, q), dtype=np.int64)
            for i in range(q):
                for j in range(q):
                    add[i, j] = _from_digits(
                        [(x + y) % p for x, y in zip(digits[i], digits[j])], p
                    )
                    mul[i, j] = _from_digits(
                        _poly_mulmod(digits[i], digits[j], modulus, p), p
                    )
        add.setflags(write=False)
        mul.setflags(write=False)
        return cls(p, d, add, mul)

    def inverse(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return int(np.flatnonzero(self.mul[a] == 1)[0])
