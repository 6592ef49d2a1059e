"""The platform group G_p and its inner automorphisms.

G_p is the group of matrices ``[[a, b], [0, 1]]`` over Z/p^2 with ``a = 1 (mod p)``,
non-abelian of order p^3. Elements are stored as the coordinate pair ``(a, b)``;
the product rule ``(a, b)(c, d) = (ac, ad + b)`` is the matrix product.

Other finite groups can be used by subclassing :class:`PlatformGroup`.
"""

from __future__ import annotations

import functools
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Hashable, Iterator

from .ring import Modulus, is_prime

ENUMERATION_LIMIT = 10**6


class ParamsMismatch(ValueError):
    pass


class PlatformGroup(ABC):
    """Minimal interface a finite group must provide to host the construction."""

    @abstractmethod
    def identity(self) -> Any: ...

    @abstractmethod
    def mul(self, x, y): ...

    @abstractmethod
    def inverse(self, x): ...

    @abstractmethod
    def is_central(self, x) -> bool: ...

    @abstractmethod
    def order(self) -> int: ...

    @abstractmethod
    def elements(self) -> Iterator[Any]: ...

    def contains(self, x) -> bool:
        return True

    def power(self, x, k: int):
        """x**k by square-and-multiply; negative k goes through the inverse."""
        if k < 0:
            x, k = self.inverse(x), -k
        result = self.identity()
        while k:
            if k & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            k >>= 1
        return result

    def pair_order_bound(self) -> int:
        """A multiple of the order of every pair (g, inner automorphism)."""
        # |G x| Inn(G)| = |G| * |G/Z(G)| divides |G|**2.
        return self.order() ** 2

    def central_class_key(self, x) -> Hashable:
        """Hashable key equal for x, y whenever x^-1 y is central."""
        # Always-correct fallback; groups with a cheap normal form should override.
        return None


@dataclass(frozen=True)
class GroupParams:
    p: int
    p_squared: Modulus = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p = self.p
        if not isinstance(p, int) or p < 3 or not is_prime(p):
            raise ValueError(f"p must be an odd prime, got {p!r}")
        if p >= 2**64:
            raise ValueError("p must fit in 64 bits")
        object.__setattr__(self, "p_squared", Modulus(p * p))

    @property
    def p2(self) -> int:
        return self.p_squared.value

    @property
    def element_width(self) -> int:
        """Bytes per coordinate in the canonical encoding: ceil(bits(p^2) / 8)."""
        return (self.p2.bit_length() + 7) // 8

    @property
    def group(self) -> Gp:
        return Gp.of(self.p)


@dataclass(frozen=True, slots=True)
class PlatformElement:
    a: int
    b: int
    params: GroupParams

    def __repr__(self):
        return f"({self.a},{self.b})"

    def __mul__(self, other: PlatformElement) -> PlatformElement:
        return gp_mul(self, other)

    def to_bytes(self) -> bytes:
        w = self.params.element_width
        return self.a.to_bytes(w, "big") + self.b.to_bytes(w, "big")


def make_element(params: GroupParams, a: int, b: int) -> PlatformElement:
    """Validated constructor; rejects unreduced coordinates and a != 1 (mod p)."""
    p, p2 = params.p, params.p2
    if not (0 <= a < p2 and 0 <= b < p2):
        raise ValueError(f"coordinates ({a}, {b}) not reduced modulo {p2}")
    if a % p != 1:
        raise ValueError(f"a = {a} is not congruent to 1 modulo {p}")
    return PlatformElement(a, b, params)


def element_from_bytes(params: GroupParams, data: bytes) -> PlatformElement:
    w = params.element_width
    if len(data) != 2 * w:
        raise ValueError(f"expected {2 * w} bytes for a group element, got {len(data)}")
    return make_element(params, int.from_bytes(data[:w], "big"), int.from_bytes(data[w:], "big"))


def _same(x: PlatformElement, y: PlatformElement) -> GroupParams:
    if x.params is not y.params and x.params != y.params:
        raise ParamsMismatch(f"elements over p={x.params.p} and p={y.params.p}")
    return x.params


def gp_mul(x: PlatformElement, y: PlatformElement) -> PlatformElement:
    params = _same(x, y)
    m = params.p2
    return PlatformElement(x.a * y.a % m, (x.a * y.b + x.b) % m, params)


def gp_identity(params: GroupParams) -> PlatformElement:
    return PlatformElement(1, 0, params)


def gp_inverse(x: PlatformElement) -> PlatformElement:
    m = x.params.p2
    ai = pow(x.a, -1, m)
    return PlatformElement(ai, -ai * x.b % m, x.params)


def gp_power(x: PlatformElement, k: int) -> PlatformElement:
    """Closed form ``(a, b)**k = (a**k, b * (1 + a + ... + a**(k-1)))``.

    The geometric sum is taken modulo p^2 by exponentiating modulo ``(a-1) p^2``
    and dividing exactly by ``a - 1``, since a - 1 is not invertible mod p^2.
    """
    if k < 0:
        return gp_power(gp_inverse(x), -k)
    m = x.params.p2
    if x.a == 1:
        return PlatformElement(1, x.b * k % m, x.params)
    d = x.a - 1
    t = pow(x.a, k, d * m)
    geometric = (t - 1) % (d * m) // d
    return PlatformElement(t % m, x.b * geometric % m, x.params)


def gp_is_central(x: PlatformElement) -> bool:
    # Z(G_p) = {(1, kp)}.
    return x.a == 1 and x.b % x.params.p == 0


def enumerate_group(params: GroupParams) -> Iterator[PlatformElement]:
    p, p2 = params.p, params.p2
    if p**3 > ENUMERATION_LIMIT:
        raise ValueError(f"|G_{p}| = {p**3} exceeds the enumeration limit {ENUMERATION_LIMIT}")
    for a in range(1, p2, p):
        for b in range(p2):
            yield PlatformElement(a, b, params)


class Gp(PlatformGroup):
    """G_p as a :class:`PlatformGroup`; one shared instance per prime."""

    def __init__(self, params: GroupParams):
        self.params = params
        self.p = params.p

    @classmethod
    @functools.lru_cache(maxsize=None)
    def of(cls, p: int) -> Gp:
        return cls(GroupParams(p))

    def __repr__(self):
        return f"Gp({self.p})"

    def __eq__(self, other):
        return isinstance(other, Gp) and other.params == self.params

    def __hash__(self):
        return hash(("Gp", self.p))

    def element(self, a: int, b: int) -> PlatformElement:
        return make_element(self.params, a, b)

    def identity(self):
        return gp_identity(self.params)

    def mul(self, x, y):
        return gp_mul(x, y)

    def inverse(self, x):
        return gp_inverse(x)

    def power(self, x, k):
        return gp_power(x, k)

    def is_central(self, x):
        return gp_is_central(x)

    def contains(self, x):
        return (isinstance(x, PlatformElement) and x.params == self.params
                and 0 <= x.a < self.params.p2 and 0 <= x.b < self.params.p2
                and x.a % self.p == 1)

    def order(self):
        return self.p**3

    def elements(self):
        return enumerate_group(self.params)

    def pair_order_bound(self):
        # |G_p| * |Aut(G_p)| = p^3 * p^3 (p - 1).
        return self.p**6 * (self.p - 1)

    def central_class_key(self, x):
        # Cosets of Z(G_p) = {(1, kp)} are {(a, b + kp)}.
        return (x.a, x.b % self.p)


def group_of(x) -> PlatformGroup:
    if isinstance(x, PlatformElement):
        return x.params.group
    raise TypeError(f"cannot infer the platform group of {x!r}; pass it explicitly")


class Automorphism:
    """Inner automorphism ``x -> h x h^-1`` stored as its conjugator h.

    Two automorphisms compare equal when they act identically, i.e. when their
    conjugators differ by a central element.
    """

    __slots__ = ("group", "conjugator", "_inverse_conjugator")

    def __init__(self, conjugator, group: PlatformGroup | None = None):
        self.group = group if group is not None else group_of(conjugator)
        self.conjugator = conjugator
        self._inverse_conjugator = self.group.inverse(conjugator)

    @classmethod
    def identity(cls, group: PlatformGroup) -> Automorphism:
        return cls(group.identity(), group)

    def __repr__(self):
        return f"Automorphism(h={self.conjugator!r})"

    def __call__(self, x):
        return apply_automorphism(self, x)

    def __eq__(self, other):
        if not isinstance(other, Automorphism) or other.group != self.group:
            return NotImplemented
        return self.group.is_central(self.group.mul(self._inverse_conjugator, other.conjugator))

    def __hash__(self):
        return hash((self.group, self.group.central_class_key(self.conjugator)))

    def is_identity(self) -> bool:
        return self.group.is_central(self.conjugator)

    def inverse(self) -> Automorphism:
        return Automorphism(self._inverse_conjugator, self.group)


def apply_automorphism(phi: Automorphism, x):
    G = phi.group
    return G.mul(G.mul(phi.conjugator, x), phi._inverse_conjugator)


def compose_automorphisms(phi: Automorphism, psi: Automorphism) -> Automorphism:
    """The automorphism that applies psi first, then phi (conjugator phi.h * psi.h)."""
    if phi.group != psi.group:
        raise ParamsMismatch("automorphisms of different groups")
    return Automorphism(phi.group.mul(phi.conjugator, psi.conjugator), phi.group)


def automorphism_power(phi: Automorphism, k: int) -> Automorphism:
    if k < 0:
        raise ValueError("automorphism_power takes k >= 0")
    return Automorphism(phi.group.power(phi.conjugator, k), phi.group)
