"""The semidirect product G x| Aut(G), the s-function, periods and the Z_n action.

Multiplication follows ``(g, phi)(g', phi') = (phi'(g) g', phi' phi)``, so that
``(g, phi)**x = (s(x), phi**x)`` with ``s(x) = phi^(x-1)(g) ... phi(g) g``.
The cycle ``{s(0), ..., s(n-1)}`` carries a free transitive action of Z_n
where n is the least positive integer with ``s(n) = 1``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any

from .platform import (
    Automorphism,
    Gp,
    ParamsMismatch,
    PlatformGroup,
    apply_automorphism,
    automorphism_power,
    compose_automorphisms,
)
from .ring import divisors_from_factorization, divisors_sorted, factorize

log = logging.getLogger(__name__)

CYCLE_ENUMERATION_LIMIT = 10**6
TOY_PERIOD_FLOOR = 2**30


@dataclass(frozen=True)
class SemidirectElement:
    first: Any
    second: Automorphism

    @property
    def group(self) -> PlatformGroup:
        return self.second.group

    def __mul__(self, other):
        return sd_mul(self, other)

    def is_identity(self) -> bool:
        G = self.group
        return self.first == G.identity() and self.second.is_identity()


def sd_identity(group: PlatformGroup) -> SemidirectElement:
    return SemidirectElement(group.identity(), Automorphism.identity(group))


def sd_mul(x: SemidirectElement, y: SemidirectElement) -> SemidirectElement:
    G = x.group
    if y.group != G:
        raise ParamsMismatch("semidirect elements over different groups")
    return SemidirectElement(
        G.mul(apply_automorphism(y.second, x.first), y.first),
        compose_automorphisms(y.second, x.second),
    )


def sd_inverse(x: SemidirectElement) -> SemidirectElement:
    phi_inv = x.second.inverse()
    return SemidirectElement(apply_automorphism(phi_inv, x.group.inverse(x.first)), phi_inv)


def sd_power(x: SemidirectElement, k: int) -> SemidirectElement:
    if k < 0:
        raise ValueError("sd_power takes k >= 0; reduce negative exponents modulo n first")
    result = sd_identity(x.group)
    while k:
        if k & 1:
            result = sd_mul(result, x)
        x = sd_mul(x, x)
        k >>= 1
    return result


@dataclass(frozen=True)
class SemidirectPair:
    """A pair (g, phi) with its period memoized after the first computation."""

    g: Any
    phi: Automorphism
    _period: int | None = field(default=None, compare=False, repr=False)
    # h^-1 g, the element whose powers make up s(x) = h^x (h^-1 g)^x.
    _shift: Any = field(default=None, init=False, compare=False, repr=False)

    def __post_init__(self):
        G = self.phi.group
        object.__setattr__(self, "_shift", G.mul(self.phi._inverse_conjugator, self.g))

    @classmethod
    def from_conjugator(cls, g, h, period: int | None = None) -> SemidirectPair:
        return cls(g, Automorphism(h), period)

    @property
    def group(self) -> PlatformGroup:
        return self.phi.group

    @property
    def element(self) -> SemidirectElement:
        return SemidirectElement(self.g, self.phi)

    @property
    def period(self) -> int:
        if self._period is None:
            compute_period(self)
        return self._period

    @property
    def has_period(self) -> bool:
        return self._period is not None

    def is_identity(self) -> bool:
        return self.element.is_identity()


def s_value(pair: SemidirectPair, x: int):
    """First coordinate of (g, phi)**x.

    For an inner phi = conj(h) the product telescopes to ``h^x (h^-1 g)^x``,
    which costs two platform exponentiations instead of a semidirect ladder.
    """
    if x < 0:
        raise ValueError("s_value takes x >= 0")
    G = pair.group
    return G.mul(G.power(pair.phi.conjugator, x), G.power(pair._shift, x))


def s_value_ladder(pair: SemidirectPair, x: int):
    """s(x) read off a square-and-multiply power in the semidirect product."""
    return sd_power(pair.element, x).first


def step(i: int, X, pair: SemidirectPair):
    """``phi^i(X) s(i)`` for any i >= 0; equals s(i + j) when X = s(j)."""
    phi_i = automorphism_power(pair.phi, i)
    return pair.group.mul(apply_automorphism(phi_i, X), s_value(pair, i))


def act(scalar: int, X, pair: SemidirectPair):
    """The action of the residue class [scalar] in Z_n on a cycle element X."""
    n = pair.period
    if not 0 <= scalar < n:
        raise ValueError(f"scalar {scalar} out of range for Z_{n}")
    return step(scalar, X, pair)


def candidate_periods(p: int) -> frozenset[int]:
    """The twelve period values listed for G_p: p..p^6 and (p-1)p^0..(p-1)p^5."""
    return frozenset([p**k for k in range(1, 7)] + [(p - 1) * p**k for k in range(6)])


def _candidate_divisors(group: PlatformGroup, timeout: float) -> list[int]:
    if isinstance(group, Gp):
        p = group.p
        factors = factorize(p - 1, timeout)
        factors[p] = factors.get(p, 0) + 6
        return divisors_from_factorization(factors)
    return divisors_sorted(group.pair_order_bound(), timeout)


@dataclass(frozen=True)
class PeriodReport:
    n: int
    in_candidate_set: bool | None  # None when the group is not some G_p
    toy: bool


def compute_period(pair: SemidirectPair, timeout: float = 10.0) -> int:
    """Least n > 0 with s(n) = 1, by scanning divisors of the pair-order bound.

    The degenerate pair with g = 1 has period 1.
    """
    if pair._period is not None:
        return pair._period
    G = pair.group
    one = G.identity()
    n = None
    for d in _candidate_divisors(G, timeout):
        if s_value(pair, d) == one:
            n = d
            break
    if n is None:
        raise RuntimeError("no divisor of the order bound annihilates s; group interface is inconsistent")
    object.__setattr__(pair, "_period", n)
    report = period_report(pair)
    if n == 1:
        log.debug("degenerate pair (%r, %r): g is the identity, period 1", pair.g, pair.phi)
    elif report.in_candidate_set is False:
        log.warning("period n=%d of pair (%r, %r) lies outside the 12-value candidate set for p=%d",
                    n, pair.g, pair.phi, G.p)
    return n


def period_report(pair: SemidirectPair) -> PeriodReport:
    n = pair.period
    G = pair.group
    in_set = n in candidate_periods(G.p) if isinstance(G, Gp) else None
    return PeriodReport(n, in_set, n < TOY_PERIOD_FLOOR)


def with_period(pair: SemidirectPair, n: int) -> SemidirectPair:
    """A copy of pair carrying a known period (e.g. loaded from a key file)."""
    return SemidirectPair(pair.g, pair.phi, n)


def enumerate_cycle(pair: SemidirectPair) -> list:
    n = pair.period
    if n > CYCLE_ENUMERATION_LIMIT:
        raise ValueError(f"cycle of size {n} exceeds the enumeration limit")
    G = pair.group
    out = [G.identity()]
    for _ in range(n - 1):
        # s(k + 1) = phi(s(k)) g
        out.append(G.mul(apply_automorphism(pair.phi, out[-1]), pair.g))
    return out
