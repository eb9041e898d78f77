"""Arithmetic in the prime field F_q for odd prime q.

A FieldContext precomputes the three tables everything else runs on:
multiplicative inverses, the quadratic character eta (+1 on nonzero
squares, -1 on nonsquares), and the additive character table
exp(2*pi*i*j/q).  Field elements are plain Python ints reduced mod q.

All character evaluations go through char_table, so identical j always
yields bit-identical complex values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import (
    CompositeModulus,
    EvenModulus,
    ModulusTooLarge,
    ModulusTooSmall,
    ZeroInverse,
)

# Table memory cap: q complex values per context.
DEFAULT_MODULUS_CAP = 2 ** 20


@dataclass(frozen=True, eq=False)
class FieldContext:
    """Immutable tables for F_q; safe to share across threads."""

    q: int
    inv_table: np.ndarray   # int64, length q; inv_table[0] = 0 sentinel
    eta_table: np.ndarray   # int8, length q; eta_table[0] = 0
    char_table: np.ndarray  # complex128, length q; char_table[j] = e(j/q)

    def __repr__(self) -> str:  # keep reprs short; tables are big
        return f"FieldContext(q={self.q})"


def _is_prime(n: int) -> bool:
    """Trial division; adequate for q <= 2**20."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def make_field(q: int, modulus_cap: int = DEFAULT_MODULUS_CAP) -> FieldContext:
    """Validate q and build the inverse / quadratic-character / character tables.

    Raises ModulusTooSmall, EvenModulus, ModulusTooLarge or
    CompositeModulus when q is not an odd prime in [3, modulus_cap].
    """
    q = int(q)
    if q < 3:
        raise ModulusTooSmall(f"q = {q} < 3")
    if q % 2 == 0:
        raise EvenModulus(f"q = {q} is even")
    if q > modulus_cap:
        raise ModulusTooLarge(f"q = {q} exceeds cap {modulus_cap}")
    if not _is_prime(q):
        raise CompositeModulus(f"q = {q} is not prime")

    # inv[a] via the O(q) recurrence inv[a] = -(q//a) * inv[q%a] mod q.
    inv = np.zeros(q, dtype=np.int64)
    inv[1] = 1
    for a in range(2, q):
        inv[a] = (-(q // a) * inv[q % a]) % q

    # eta: mark the (q-1)/2 nonzero squares.
    eta = np.full(q, -1, dtype=np.int8)
    eta[0] = 0
    a = np.arange(1, q, dtype=np.int64)
    eta[(a * a) % q] = 1

    char = np.exp(2j * np.pi * np.arange(q) / q)
    char[0] = 1.0 + 0.0j

    return FieldContext(q=q, inv_table=inv, eta_table=eta, char_table=char)


def inverse(ctx: FieldContext, a: int) -> int:
    """Multiplicative inverse of a mod q; raises ZeroInverse for a = 0."""
    a = a % ctx.q
    if a == 0:
        raise ZeroInverse("0 has no multiplicative inverse")
    return int(ctx.inv_table[a])


def quadratic_character(ctx: FieldContext, a: int) -> int:
    """eta(a): +1 for nonzero squares, -1 for nonsquares, 0 for a = 0."""
    return int(ctx.eta_table[a % ctx.q])


def sqrt_mod(ctx: FieldContext, a: int) -> Optional[int]:
    """Canonical square root of a mod q, or None when a is a nonsquare.

    Canonical means the numerically smaller of the two roots.  Uses the
    direct exponent for q = 3 mod 4 and Tonelli-Shanks otherwise.
    """
    q = ctx.q
    a = a % q
    if a == 0:
        return 0
    if ctx.eta_table[a] == -1:
        return None

    if q % 4 == 3:
        r = pow(a, (q + 1) // 4, q)
    else:
        # Tonelli-Shanks: write q - 1 = d * 2^e with d odd.
        d, e = q - 1, 0
        while d % 2 == 0:
            d //= 2
            e += 1
        z = 2
        while ctx.eta_table[z] != -1:
            z += 1
        c = pow(z, d, q)
        r = pow(a, (d + 1) // 2, q)
        t = pow(a, d, q)
        m = e
        while t != 1:
            t2i, i = t, 0
            while t2i != 1:
                t2i = (t2i * t2i) % q
                i += 1
            b = pow(c, 1 << (m - i - 1), q)
            r = (r * b) % q
            c = (b * b) % q
            t = (t * c) % q
            m = i
    return min(r, q - r)


def additive_character(ctx: FieldContext, j: int) -> complex:
    """e(j/q) = exp(2*pi*i*j/q), read from the precomputed table."""
    return complex(ctx.char_table[j % ctx.q])
