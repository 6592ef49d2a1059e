"""Exact modular arithmetic, primality, divisor enumeration and uniform sampling."""

from __future__ import annotations

import hashlib
import math
import os
import time
from dataclasses import dataclass
from typing import Callable

# An entropy source returns exactly k unbiased bytes per call.
EntropySource = Callable[[int], bytes]

MAX_MODULUS_BITS = 256

# Deterministic for every m < 3.3 * 10**24, which covers 2**64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


class FactorizationTimeout(RuntimeError):
    pass


@dataclass(frozen=True)
class Modulus:
    value: int

    def __post_init__(self):
        if not isinstance(self.value, int) or self.value < 1:
            raise ValueError(f"modulus must be a positive integer, got {self.value!r}")
        if self.value.bit_length() > MAX_MODULUS_BITS:
            raise ValueError(f"modulus exceeds {MAX_MODULUS_BITS} bits")

    def __int__(self):
        return self.value

    @property
    def byte_width(self) -> int:
        """Bytes needed for a fixed-width big-endian residue (at least 1)."""
        return max(1, ((self.value - 1).bit_length() + 7) // 8)


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: Modulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.value:
            raise ValueError(f"{self.value} is not reduced modulo {self.modulus.value}")

    @classmethod
    def of(cls, value: int, modulus: int | Modulus) -> Residue:
        m = modulus if isinstance(modulus, Modulus) else Modulus(modulus)
        return cls(value % m.value, m)

    def __int__(self):
        return self.value

    def __add__(self, other):
        return mod_add(self, other)

    def __sub__(self, other):
        return mod_sub(self, other)

    def __mul__(self, other):
        return mod_mul(self, other)

    def __neg__(self):
        return Residue((-self.value) % self.modulus.value, self.modulus)


def _check_same(x: Residue, y: Residue) -> int:
    if x.modulus != y.modulus:
        raise ValueError(f"modulus mismatch: {x.modulus.value} vs {y.modulus.value}")
    return x.modulus.value


def mod_add(x: Residue, y: Residue) -> Residue:
    m = _check_same(x, y)
    return Residue((x.value + y.value) % m, x.modulus)


def mod_sub(x: Residue, y: Residue) -> Residue:
    m = _check_same(x, y)
    return Residue((x.value - y.value) % m, x.modulus)


def mod_mul(x: Residue, y: Residue) -> Residue:
    m = _check_same(x, y)
    return Residue((x.value * y.value) % m, x.modulus)


def mod_inverse(x: Residue) -> Residue:
    m = x.modulus.value
    if math.gcd(x.value, m) != 1:
        raise ValueError(f"{x.value} is not invertible modulo {m}")
    return Residue(pow(x.value, -1, m) if m > 1 else 0, x.modulus)


def is_prime(m: int) -> bool:
    """Miller-Rabin with fixed bases; exact for all m below 2**64 (and well beyond)."""
    if m < 2:
        return False
    for q in _SMALL_PRIMES:
        if m % q == 0:
            return m == q
    d, r = m - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _pollard_brent(m: int, seed: int, deadline: float) -> int:
    # Brent's cycle-finding variant; returns a nontrivial factor or m on failure.
    y, c, batch = seed % m, (seed * 7 + 1) % m or 1, 128
    g = r = q = 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % m
        k = 0
        while k < r and g == 1:
            if time.monotonic() > deadline:
                raise FactorizationTimeout(f"could not factor {m} in time")
            ys = y
            for _ in range(min(batch, r - k)):
                y = (y * y + c) % m
                q = q * abs(x - y) % m
            g = math.gcd(q, m)
            k += batch
        r *= 2
    if g == m:
        while True:
            ys = (ys * ys + c) % m
            g = math.gcd(abs(x - ys), m)
            if g > 1:
                break
    return g


def factorize(m: int, timeout: float = 10.0) -> dict[int, int]:
    """Prime factorization {prime: exponent} by trial division then Pollard rho."""
    if m < 1:
        raise ValueError("can only factor positive integers")
    deadline = time.monotonic() + timeout
    factors: dict[int, int] = {}
    for q in range(2, 1000):
        while m % q == 0:
            factors[q] = factors.get(q, 0) + 1
            m //= q
        if q * q > m:
            break
    stack = [m] if m > 1 else []
    while stack:
        f = stack.pop()
        if f == 1:
            continue
        if is_prime(f):
            factors[f] = factors.get(f, 0) + 1
            continue
        root = math.isqrt(f)
        if root * root == f:
            stack += [root, root]
            continue
        seed = 2
        d = f
        while d in (1, f):
            d = _pollard_brent(f, seed, deadline)
            seed += 1
        stack += [d, f // d]
    return dict(sorted(factors.items()))


def divisors_from_factorization(factors: dict[int, int]) -> list[int]:
    divs = [1]
    for q, e in factors.items():
        divs = [d * q**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def divisors_sorted(m: int, timeout: float = 10.0) -> list[int]:
    """All divisors of m in increasing order."""
    if m > 2**128:
        raise ValueError("divisor enumeration is limited to m <= 2**128")
    return divisors_from_factorization(factorize(m, timeout))


system_entropy: EntropySource = os.urandom


class SeededEntropy:
    """Deterministic entropy stream: SHAKE256(seed || counter) blocks, concatenated."""

    def __init__(self, seed: bytes):
        self.seed = bytes(seed)
        self._counter = 0
        self._buffer = b""

    def __call__(self, k: int) -> bytes:
        while len(self._buffer) < k:
            block = hashlib.shake_256(
                b"SPDH-SEED" + self.seed + self._counter.to_bytes(8, "big")
            ).digest(64)
            self._counter += 1
            self._buffer += block
        out, self._buffer = self._buffer[:k], self._buffer[k:]
        return out


def sample_uniform(mod: int | Modulus, rng: EntropySource) -> Residue:
    """Uniform residue by rejection sampling on exactly bit_length(mod - 1) bits.

    Nothing is drawn from ``rng`` when the modulus is 1.
    """
    m = mod if isinstance(mod, Modulus) else Modulus(mod)
    bits = (m.value - 1).bit_length()
    if bits == 0:
        return Residue(0, m)
    nbytes = (bits + 7) // 8
    mask = (1 << bits) - 1
    while True:
        raw = rng(nbytes)
        if len(raw) != nbytes:
            raise RuntimeError("entropy source returned the wrong number of bytes")
        v = int.from_bytes(raw, "big") & mask
        if v < m.value:
            return Residue(v, m)


def sample_below(n: int, rng: EntropySource) -> int:
    return sample_uniform(n, rng).value
