"""Exhaustive invariant checks at p = 3 and p = 5, shared by the CLI."""

from __future__ import annotations

import itertools
from typing import Callable, Iterator

from .cryptanalysis import SdlpInstance, build_hidden_shift, solve_sdlp_bruteforce, telescoping_check
from .platform import Gp, apply_automorphism, automorphism_power
from .semidirect import (
    SemidirectPair,
    act,
    compute_period,
    enumerate_cycle,
    s_value,
    sd_mul,
)


def running_pair() -> SemidirectPair:
    G = Gp.of(3)
    return SemidirectPair.from_conjugator(G.element(1, 1), G.element(4, 1))


def brute_force_order(pair: SemidirectPair) -> int:
    x, k = pair.element, 1
    while not x.is_identity():
        x = sd_mul(x, pair.element)
        k += 1
    return k


def _group_axioms(p: int) -> bool:
    G = Gp.of(p)
    elems = list(G.elements())
    e = G.identity()
    for x in elems:
        if G.mul(x, e) != x or G.mul(e, x) != x or G.mul(x, G.inverse(x)) != e:
            return False
    return all(G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z))
               for x, y, z in itertools.product(elems, repeat=3))


def _addition_in_exponents() -> bool:
    pair = running_pair()
    n = compute_period(pair)
    G = pair.group
    return all(
        G.mul(apply_automorphism(automorphism_power(pair.phi, j), s_value(pair, i)), s_value(pair, j))
        == s_value(pair, i + j)
        for i in range(3 * n) for j in range(3 * n)
    )


def _free_transitive(p: int) -> bool:
    G = Gp.of(p)
    elems = list(G.elements())
    for g, h in itertools.product(elems[::7], elems[::5]):
        pair = SemidirectPair.from_conjugator(g, h)
        n = compute_period(pair)
        cycle = enumerate_cycle(pair)
        if len(set(cycle)) != n:
            return False
        for i, j in itertools.product(range(n), repeat=2):
            if act((j - i) % n, cycle[i], pair) != cycle[j]:
                return False
        for i in range(1, n):
            if all(act(i, X, pair) == X for X in cycle):
                return False
    return True


def _period_divides_order(p: int) -> bool:
    G = Gp.of(p)
    elems = list(G.elements())
    step = 1 if p == 3 else 11
    for g, h in itertools.product(elems[::step], elems[::step]):
        pair = SemidirectPair.from_conjugator(g, h)
        if brute_force_order(pair) % compute_period(pair):
            return False
    return True


def _sdlp_and_shift(p: int) -> bool:
    G = Gp.of(p)
    elems = list(G.elements())
    for g, h in [(elems[1], elems[p * p + 1]), (elems[p + 2], elems[2 * p * p + 3])]:
        pair = SemidirectPair.from_conjugator(g, h)
        n = compute_period(pair)
        for x in range(n):
            if solve_sdlp_bruteforce(SdlpInstance.from_exponent(pair, x)) != x:
                return False
        if not all(telescoping_check(pair, x)[1] for x in range(2 * n)):
            return False
        if not all(build_hidden_shift(pair, x).holds() for x in range(1, n)):
            return False
    return True


CHECKS: dict[str, Callable[[], bool]] = {
    "group axioms p=3": lambda: _group_axioms(3),
    "addition in exponents (running pair)": _addition_in_exponents,
    "free transitive action p=3": lambda: _free_transitive(3),
    "free transitive action p=5": lambda: _free_transitive(5),
    "period divides pair order p=3": lambda: _period_divides_order(3),
    "period divides pair order p=5": lambda: _period_divides_order(5),
    "sdlp / telescoping / hidden shift p=3": lambda: _sdlp_and_shift(3),
    "sdlp / telescoping / hidden shift p=5": lambda: _sdlp_and_shift(5),
}


def run() -> Iterator[tuple[str, bool]]:
    for name, check in CHECKS.items():
        yield name, check()
