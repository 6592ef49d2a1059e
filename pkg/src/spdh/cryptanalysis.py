"""Desk-scale attacks and reductions: brute-force SDLP, the telescoping identity,
the hidden-shift instance, and a chosen-message forgery game."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .platform import apply_automorphism, automorphism_power
from .ring import EntropySource
from .semidirect import SemidirectPair, act, s_value, step
from .signature import PublicKey, Signature, encode_sig, keygen, sign, verify

BRUTE_FORCE_LIMIT = 10**7


@dataclass(frozen=True)
class SdlpInstance:
    pair: SemidirectPair
    target: Any

    @classmethod
    def from_exponent(cls, pair: SemidirectPair, x: int) -> SdlpInstance:
        return cls(pair, s_value(pair, x))


def solve_sdlp_bruteforce(instance: SdlpInstance, limit: int = BRUTE_FORCE_LIMIT) -> int:
    """Least x in [0, n) with s(x) = target, walking s(k+1) = phi(s(k)) g."""
    pair = instance.pair
    n = pair.period
    if n > limit:
        raise ValueError(f"period {n} exceeds the brute-force limit {limit}")
    G = pair.group
    y = G.identity()
    for x in range(n):
        if y == instance.target:
            return x
        y = G.mul(apply_automorphism(pair.phi, y), pair.g)
    raise ValueError("target is not in the cycle of the pair")


def telescoping_check(pair: SemidirectPair, x: int):
    """Recover phi^x(g) from s(x) alone, as ``(1 * s(x)) s(x)^-1``.

    Returns the recovered element and whether it matches phi^x(g) computed directly.
    """
    if x < 0:
        raise ValueError("x must be non-negative")
    G = pair.group
    sx = s_value(pair, x)
    stepped = step(1, sx, pair)
    recovered = G.mul(stepped, G.inverse(sx))
    direct = apply_automorphism(automorphism_power(pair.phi, x), pair.g)
    return recovered, recovered == direct


@dataclass(frozen=True)
class HiddenShiftInstance:
    f: Callable[[int], Any]
    g: Callable[[int], Any]
    n: int
    shift: int  # kept only so tests can check the relation

    def holds(self) -> bool:
        """Exhaustively check f(z) = g(z + shift) over Z_n."""
        return all(self.f(z) == self.g((z + self.shift) % self.n) for z in range(self.n))


def build_hidden_shift(pair: SemidirectPair, x: int) -> HiddenShiftInstance:
    """f(z) = [z] s(x) and g(z) = [z] s(1) hide the shift x - 1."""
    n = pair.period
    if not 1 <= x < n:
        raise ValueError(f"x must lie in [1, {n})")
    target, base = s_value(pair, x), s_value(pair, 1)
    return HiddenShiftInstance(
        f=lambda z: act(z % n, target, pair),
        g=lambda z: act(z % n, base, pair),
        n=n,
        shift=(x - 1) % n,
    )


def exponent_from_shift(shift: int, n: int) -> int:
    return (shift + 1) % n


class QueryLimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class GameOutcome:
    won: bool
    verified: bool  # the forgery passes verification
    fresh: bool  # the message was never submitted to the signing oracle
    queries: int
    reason: str = ""


Adversary = Callable[[PublicKey, Callable[[bytes], bytes]], "tuple[bytes, bytes | Signature]"]


def cma_game(pair: SemidirectPair, adversary: Adversary, rng: EntropySource,
             rounds: int = 16, max_queries: int = 16, insecure: bool = True) -> GameOutcome:
    """Chosen-message forgery game.

    The adversary receives the public key and a signing oracle (bytes in, encoded
    signature out) and returns ``(message, signature)``. A forgery on a message
    that was queried counts as a replay and does not win.
    """
    key = keygen(pair, rng, rounds=rounds, insecure=insecure)
    asked: list[bytes] = []

    def oracle(message: bytes) -> bytes:
        if len(asked) >= max_queries:
            raise QueryLimitExceeded(f"more than {max_queries} signing queries")
        asked.append(bytes(message))
        return encode_sig(sign(message, key, rng), key.public)

    message, forgery = adversary(key.public, oracle)
    verdict = verify(bytes(message), forgery, key.public)
    fresh = bytes(message) not in asked
    reason = verdict.reason if not verdict else ("" if fresh else "replayed a queried message")
    return GameOutcome(verdict.accepted and fresh, verdict.accepted, fresh, len(asked), reason)
