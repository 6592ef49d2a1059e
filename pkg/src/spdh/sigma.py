"""N-round identification protocol over the Z_n action, with extractor and simulator.

Each round publishes ``(X_i, Y_i = [s_i] X_i)``. The prover commits to
``I_i = [t_i] X_i`` and answers challenge bit c_i with ``t_i`` (c_i = 0) or
``t_i - s_i`` (c_i = 1); the verifier recomputes from X_i or Y_i accordingly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .ring import EntropySource, sample_below
from .semidirect import TOY_PERIOD_FLOOR, SemidirectPair, act, s_value


class PeriodTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    reason: str = ""

    def __bool__(self):
        return self.accepted


ACCEPT = Verdict(True)


def reject(reason: str) -> Verdict:
    return Verdict(False, reason)


@dataclass(frozen=True)
class IdPublicKey:
    pair: SemidirectPair
    bases: tuple  # X_1..X_N
    targets: tuple  # Y_1..Y_N

    @property
    def rounds(self) -> int:
        return len(self.bases)

    @property
    def n(self) -> int:
        return self.pair.period


@dataclass(frozen=True)
class IdSecretKey:
    scalars: tuple[int, ...]


@dataclass(frozen=True)
class ProverState:
    nonces: tuple[int, ...]  # t_1..t_N, never sent


@dataclass(frozen=True)
class Transcript:
    commitment: tuple
    challenge: tuple[int, ...]
    response: tuple[int, ...]


def check_period(pair: SemidirectPair, insecure: bool = False) -> int:
    n = pair.period
    floor = 2 if insecure else TOY_PERIOD_FLOOR
    if n < floor:
        hint = "" if insecure else "; pass insecure=True for toy parameters"
        raise PeriodTooSmall(f"period n={n} is below the floor {floor}{hint}")
    return n


def id_keygen(pair: SemidirectPair, rounds: int, rng: EntropySource,
              insecure: bool = False) -> tuple[IdSecretKey, IdPublicKey]:
    if rounds < 1:
        raise ValueError("need at least one round")
    n = check_period(pair, insecure)
    bases, scalars, targets = [], [], []
    for _ in range(rounds):
        X = s_value(pair, sample_below(n, rng))
        s = sample_below(n, rng)
        bases.append(X)
        scalars.append(s)
        targets.append(act(s, X, pair))
    return IdSecretKey(tuple(scalars)), IdPublicKey(pair, tuple(bases), tuple(targets))


def relation_holds(sk: IdSecretKey, pk: IdPublicKey) -> bool:
    if len(sk.scalars) != pk.rounds:
        return False
    return all(act(s, X, pk.pair) == Y for s, X, Y in zip(sk.scalars, pk.bases, pk.targets))


def commit_with(nonces: Sequence[int], pk: IdPublicKey) -> tuple:
    return tuple(act(t, X, pk.pair) for t, X in zip(nonces, pk.bases))


def id_commit(pk: IdPublicKey, rng: EntropySource) -> tuple[tuple, ProverState]:
    n = pk.n
    nonces = tuple(sample_below(n, rng) for _ in range(pk.rounds))
    return commit_with(nonces, pk), ProverState(nonces)


def id_respond(state: ProverState, challenge: Sequence[int], sk: IdSecretKey, n: int) -> tuple[int, ...]:
    if len(challenge) != len(state.nonces) or len(challenge) != len(sk.scalars):
        raise ValueError("challenge length does not match the number of rounds")
    return tuple(t if c == 0 else (t - s) % n
                 for t, c, s in zip(state.nonces, challenge, sk.scalars))


def random_challenge(rounds: int, rng: EntropySource) -> tuple[int, ...]:
    raw = rng((rounds + 7) // 8)
    return tuple((raw[i // 8] >> (7 - i % 8)) & 1 for i in range(rounds))


def id_verify(transcript: Transcript, pk: IdPublicKey) -> Verdict:
    """Total verifier: malformed transcripts are rejected, never raised on."""
    I, c, p = transcript.commitment, transcript.challenge, transcript.response
    N = pk.rounds
    if not (len(I) == len(c) == len(p) == N):
        return reject(f"transcript vectors must all have length {N}")
    n = pk.n
    G = pk.pair.group
    for i in range(N):
        if c[i] not in (0, 1):
            return reject(f"challenge bit {i} is not 0 or 1")
        if not isinstance(p[i], int) or not 0 <= p[i] < n:
            return reject(f"response {i} out of range for Z_{n}")
        if not G.contains(I[i]):
            return reject(f"commitment {i} is not an element of the platform group")
    for i in range(N):
        base = pk.bases[i] if c[i] == 0 else pk.targets[i]
        if act(p[i], base, pk.pair) != I[i]:
            return reject(f"round {i} does not reproduce the commitment")
    return ACCEPT


def extract_witness(t1: Transcript, t2: Transcript, pk: IdPublicKey) -> list[int | None]:
    """Recover s_i wherever the two accepting transcripts disagree on c_i.

    Rounds with equal challenges reveal nothing and come back as None.
    """
    if t1.commitment != t2.commitment:
        raise ValueError("transcripts must share the commitment")
    for t in (t1, t2):
        verdict = id_verify(t, pk)
        if not verdict:
            raise ValueError(f"transcript does not verify: {verdict.reason}")
    n = pk.n
    out: list[int | None] = []
    for c1, c2, p1, p2 in zip(t1.challenge, t2.challenge, t1.response, t2.response):
        if c1 == c2:
            out.append(None)
        elif c1 == 0:
            out.append((p1 - p2) % n)
        else:
            out.append((p2 - p1) % n)
    if all(s is None for s in out):
        raise ValueError("challenges agree in every round; nothing to extract")
    return out


def simulate_transcript(pk: IdPublicKey, challenge: Sequence[int], rng: EntropySource) -> Transcript:
    """An accepting transcript for a given challenge, built without the secret."""
    if len(challenge) != pk.rounds:
        raise ValueError("challenge length does not match the number of rounds")
    n = pk.n
    t = tuple(sample_below(n, rng) for _ in range(pk.rounds))
    I = tuple(act(ti, X if ci == 0 else Y, pk.pair)
              for ti, ci, X, Y in zip(t, challenge, pk.bases, pk.targets))
    return Transcript(I, tuple(challenge), t)


Challenger = Callable[[tuple], Sequence[int]]


def run_session(sk: IdSecretKey, pk: IdPublicKey, prover_rng: EntropySource,
                challenger: Challenger | None = None,
                verifier_rng: EntropySource | None = None) -> tuple[Transcript, Verdict]:
    """Drive one in-process prover/verifier exchange.

    ``challenger`` maps the commitment to a challenge vector; by default the
    verifier draws uniform bits from ``verifier_rng`` (or the prover's source).
    """
    I, state = id_commit(pk, prover_rng)
    if challenger is None:
        source = verifier_rng or prover_rng
        c = random_challenge(pk.rounds, source)
    else:
        c = tuple(challenger(I))
    p = id_respond(state, c, sk, pk.n)
    transcript = Transcript(I, tuple(c), p)
    return transcript, id_verify(transcript, pk)
