import itertools

import pytest

from spdh.platform import Gp, PlatformGroup
from spdh.ring import SeededEntropy
from spdh.semidirect import SemidirectPair

ACCEPTANCE_RESULTS: dict[int, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        desc, ok = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {k:2d}: {desc}")


# --- independent oracles ---

def matmul_mod(x, y, m):
    """2x2 integer matrix product modulo m, on nested tuples."""
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(2)) % m for j in range(2))
        for i in range(2)
    )


def as_matrix(e):
    return ((e.a, e.b), (0, 1))


def matrix_product(p, *elems):
    """Product of G_p elements via the 2x2 matrix law; returns (a, b)."""
    m = p * p
    acc = ((1, 0), (0, 1))
    for e in elems:
        acc = matmul_mod(acc, as_matrix(e), m)
    assert acc[1] == (0, 1)
    return acc[0]


def s_product(pair, x):
    """phi^(x-1)(g) ... phi(g) g, multiplied out literally."""
    G = pair.group
    factors = []
    y = pair.g
    for _ in range(x):
        factors.append(y)
        y = pair.phi(y)
    acc = G.identity()
    for f in reversed(factors):
        acc = G.mul(acc, f)
    return acc


def linear_period(pair):
    G = pair.group
    one = G.identity()
    y, k = pair.g, 1
    while y != one:
        y = G.mul(pair.phi(y), pair.g)
        k += 1
    return k


class SymmetricGroup(PlatformGroup):
    """S_k on tuples; mul(x, y) = x after y.  Used to exercise the generic interface."""

    def __init__(self, k):
        self.k = k

    def __eq__(self, other):
        return isinstance(other, SymmetricGroup) and other.k == self.k

    def __hash__(self):
        return hash(("S", self.k))

    def identity(self):
        return tuple(range(self.k))

    def mul(self, x, y):
        return tuple(x[i] for i in y)

    def inverse(self, x):
        out = [0] * self.k
        for i, xi in enumerate(x):
            out[xi] = i
        return tuple(out)

    def is_central(self, x):
        return x == self.identity()

    def order(self):
        n = 1
        for i in range(2, self.k + 1):
            n *= i
        return n

    def elements(self):
        return itertools.permutations(range(self.k))


# --- fixtures ---

@pytest.fixture
def G3():
    return Gp.of(3)


@pytest.fixture
def G5():
    return Gp.of(5)


def running_pair_fresh():
    G = Gp.of(3)
    return SemidirectPair.from_conjugator(G.element(1, 1), G.element(4, 1))


@pytest.fixture
def running_pair():
    return running_pair_fresh()


@pytest.fixture
def rng():
    return SeededEntropy(b"tests")


MID_P = 2**31 - 1


def mid_pair():
    G = Gp.of(MID_P)
    return SemidirectPair.from_conjugator(G.element(1 + 5 * MID_P, 12345), G.element(1 + 7 * MID_P, 999))


def pairs_with_period(p, n, count=3):
    """First `count` pairs at G_p (distinct automorphisms) whose period is n."""
    G = Gp.of(p)
    out, seen = [], set()
    for h in G.elements():
        phi_key = G.central_class_key(h)
        if phi_key in seen:
            continue
        for g in G.elements():
            pair = SemidirectPair.from_conjugator(g, h)
            if linear_period(pair) == n:
                out.append(pair)
                seen.add(phi_key)
                break
        if len(out) == count:
            break
    return out
