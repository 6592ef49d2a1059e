"""Fiat-Shamir signatures over the identification protocol, plus key/signature files.

File layout (all integers big-endian, fixed width)::

    "SPDH" | version u8 | kind u8 | p u64 | N u32 | n u128 | h | g | payload

with kind 1 = public key (X..., Y...), 2 = secret key (s..., X..., Y...),
3 = signature (I..., p...). Group elements are ``a | b`` at
ceil(bits(p^2)/8) bytes each; scalars use ceil(bits(n-1)/8) bytes (min 1).
"""

from __future__ import annotations

import hashlib
import struct
from dataclasses import dataclass
from typing import Sequence

from .platform import Gp, GroupParams, PlatformElement, element_from_bytes
from .ring import EntropySource, Modulus, sample_below
from .semidirect import SemidirectPair, s_value
from .sigma import (
    IdPublicKey,
    IdSecretKey,
    ProverState,
    Transcript,
    Verdict,
    commit_with,
    id_keygen,
    id_respond,
    id_verify,
    reject,
    relation_holds,
)

TAG = b"SPDH-SIGN-v1"
TAG_PK_BOUND = b"SPDH-SIGN-v1-pkbound"
DEFAULT_ROUNDS = 128

MAGIC = b"SPDH"
VERSION = 1
KIND_PK, KIND_SK, KIND_SIG = 1, 2, 3
_FIXED = struct.Struct(">4sBBQI")  # magic, version, kind, p, N; n follows as 16 bytes


class DecodeError(ValueError):
    pass


PublicKey = IdPublicKey


@dataclass(frozen=True)
class SigningKey:
    secret: IdSecretKey
    public: IdPublicKey


@dataclass(frozen=True)
class Signature:
    commitment: tuple  # sigma_1
    response: tuple[int, ...]  # sigma_2


def keygen(pair: SemidirectPair, rng: EntropySource, rounds: int = DEFAULT_ROUNDS,
           insecure: bool = False) -> SigningKey:
    sk, pk = id_keygen(pair, rounds, rng, insecure=insecure)
    return SigningKey(sk, pk)


def hash_to_challenge(commitment: Sequence[PlatformElement], message: bytes, rounds: int,
                      prefix: bytes = b"", tag: bytes = TAG) -> tuple[int, ...]:
    """First ``rounds`` bits, MSB-first, of SHAKE256(tag | prefix | N | I | m)."""
    h = hashlib.shake_256()
    h.update(tag)
    h.update(prefix)
    h.update(rounds.to_bytes(4, "big"))
    for x in commitment:
        h.update(x.to_bytes())
    h.update(message)
    digest = h.digest((rounds + 7) // 8)
    return tuple((digest[i // 8] >> (7 - i % 8)) & 1 for i in range(rounds))


def _challenge(commitment, message: bytes, pk: PublicKey, bind_pk: bool) -> tuple[int, ...]:
    if bind_pk:
        return hash_to_challenge(commitment, message, pk.rounds, encode_pk(pk), TAG_PK_BOUND)
    return hash_to_challenge(commitment, message, pk.rounds)


def sign(message: bytes, key: SigningKey, rng: EntropySource, bind_pk: bool = False) -> Signature:
    pk = key.public
    nonces = tuple(sample_below(pk.n, rng) for _ in range(pk.rounds))
    commitment = commit_with(nonces, pk)
    c = _challenge(commitment, bytes(message), pk, bind_pk)
    return Signature(commitment, id_respond(ProverState(nonces), c, key.secret, pk.n))


def verify(message: bytes, signature: Signature | bytes, pk: PublicKey,
           bind_pk: bool = False) -> Verdict:
    """Accept iff the signature reproduces its own commitment; never raises on bad input."""
    if isinstance(signature, (bytes, bytearray, memoryview)):
        try:
            signature = decode_sig(bytes(signature), pk)
        except DecodeError as exc:
            return reject(f"malformed signature: {exc}")
    if len(signature.commitment) != pk.rounds or len(signature.response) != pk.rounds:
        return reject(f"signature vectors must have length {pk.rounds}")
    if not all(pk.pair.group.contains(x) for x in signature.commitment):
        return reject("commitment holds a value outside the platform group")
    c = _challenge(signature.commitment, bytes(message), pk, bind_pk)
    return id_verify(Transcript(signature.commitment, c, signature.response), pk)


# --- encoding ---

def scalar_width(n: int) -> int:
    return Modulus(n).byte_width


def header_length(p: int) -> int:
    return _FIXED.size + 16 + 4 * GroupParams(p).element_width


def signature_length(p: int, n: int, rounds: int) -> int:
    """Header plus N * (2 * width(p^2) + width(n)) bytes."""
    return header_length(p) + rounds * (2 * GroupParams(p).element_width + scalar_width(n))


def public_key_length(p: int, rounds: int) -> int:
    return header_length(p) + rounds * 4 * GroupParams(p).element_width


def secret_key_length(p: int, n: int, rounds: int) -> int:
    return public_key_length(p, rounds) + rounds * scalar_width(n)


def _header(kind: int, pk: PublicKey) -> bytes:
    pair = pk.pair
    p, n = pair.group.p, pk.n
    if n >= 2**128:
        raise ValueError("period does not fit the 128-bit header field")
    return (_FIXED.pack(MAGIC, VERSION, kind, p, pk.rounds) + n.to_bytes(16, "big")
            + pair.phi.conjugator.to_bytes() + pair.g.to_bytes())


def _elements(xs) -> bytes:
    return b"".join(x.to_bytes() for x in xs)


def _scalars(values, n: int) -> bytes:
    w = scalar_width(n)
    return b"".join(v.to_bytes(w, "big") for v in values)


def encode_pk(pk: PublicKey) -> bytes:
    return _header(KIND_PK, pk) + _elements(pk.bases) + _elements(pk.targets)


def encode_sk(key: SigningKey) -> bytes:
    pk = key.public
    return (_header(KIND_SK, pk) + _scalars(key.secret.scalars, pk.n)
            + _elements(pk.bases) + _elements(pk.targets))


def encode_sig(signature: Signature, pk: PublicKey) -> bytes:
    return (_header(KIND_SIG, pk) + _elements(signature.commitment)
            + _scalars(signature.response, pk.n))


class _Reader:
    def __init__(self, data: bytes):
        self.data, self.pos = data, 0

    def take(self, k: int) -> bytes:
        if self.pos + k > len(self.data):
            raise DecodeError("truncated buffer")
        out = self.data[self.pos:self.pos + k]
        self.pos += k
        return out

    def done(self):
        if self.pos != len(self.data):
            raise DecodeError(f"{len(self.data) - self.pos} trailing bytes")


def _element(r: _Reader, params: GroupParams) -> PlatformElement:
    try:
        return element_from_bytes(params, r.take(2 * params.element_width))
    except DecodeError:
        raise
    except ValueError as exc:
        raise DecodeError(str(exc)) from None


def _read_header(r: _Reader, kind: int, strict: bool):
    magic, version, got_kind, p, rounds = _FIXED.unpack(r.take(_FIXED.size))
    if magic != MAGIC:
        raise DecodeError("bad magic")
    if version != VERSION:
        raise DecodeError(f"unsupported version {version}")
    if got_kind != kind:
        raise DecodeError(f"expected object kind {kind}, found {got_kind}")
    if rounds < 1:
        raise DecodeError("round count must be positive")
    n = int.from_bytes(r.take(16), "big")
    if n < 1:
        raise DecodeError("period must be positive")
    try:
        params = Gp.of(p).params
    except ValueError as exc:
        raise DecodeError(str(exc)) from None
    h = _element(r, params)
    g = _element(r, params)
    pair = SemidirectPair.from_conjugator(g, h, period=n)
    if strict and s_value(pair, n) != params.group.identity():
        raise DecodeError(f"s(n) != 1 for the stored period n={n}")
    return params, rounds, n, pair


def _read_scalars(r: _Reader, rounds: int, n: int) -> tuple[int, ...]:
    w = scalar_width(n)
    out = []
    for _ in range(rounds):
        v = int.from_bytes(r.take(w), "big")
        if v >= n:
            raise DecodeError(f"scalar {v} out of range for Z_{n}")
        out.append(v)
    return tuple(out)


def decode_pk(data: bytes, strict: bool = True) -> PublicKey:
    r = _Reader(data)
    params, rounds, n, pair = _read_header(r, KIND_PK, strict)
    bases = tuple(_element(r, params) for _ in range(rounds))
    targets = tuple(_element(r, params) for _ in range(rounds))
    r.done()
    return IdPublicKey(pair, bases, targets)


def decode_sk(data: bytes, strict: bool = True) -> SigningKey:
    r = _Reader(data)
    params, rounds, n, pair = _read_header(r, KIND_SK, strict)
    scalars = _read_scalars(r, rounds, n)
    bases = tuple(_element(r, params) for _ in range(rounds))
    targets = tuple(_element(r, params) for _ in range(rounds))
    r.done()
    key = SigningKey(IdSecretKey(scalars), IdPublicKey(pair, bases, targets))
    if strict and not relation_holds(key.secret, key.public):
        raise DecodeError("secret scalars do not match the public key")
    return key


def decode_sig(data: bytes, pk: PublicKey | None = None) -> Signature:
    """Parse a signature; with ``pk`` given, its header must match the key's."""
    r = _Reader(data)
    header = r.take(header_length_from(data))
    if pk is not None:
        expected = _header(KIND_SIG, pk)
        if header != expected:
            raise DecodeError("signature header does not match the public key")
    hr = _Reader(header)
    params, rounds, n, _ = _read_header(hr, KIND_SIG, strict=False)
    commitment = tuple(_element(r, params) for _ in range(rounds))
    response = _read_scalars(r, rounds, n)
    r.done()
    return Signature(commitment, response)


def header_length_from(data: bytes) -> int:
    if len(data) < _FIXED.size:
        raise DecodeError("truncated buffer")
    _, _, _, p, _ = _FIXED.unpack(data[:_FIXED.size])
    try:
        return header_length(p)
    except ValueError as exc:
        raise DecodeError(str(exc)) from None
