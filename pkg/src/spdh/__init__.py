"""Group-action signatures from semidirect products of a finite group by its automorphisms."""

from .platform import Automorphism, Gp, GroupParams, PlatformElement, PlatformGroup
from .semidirect import SemidirectPair, act, compute_period, enumerate_cycle, s_value
from .signature import (
    Signature,
    SigningKey,
    decode_pk,
    decode_sig,
    decode_sk,
    encode_pk,
    encode_sig,
    encode_sk,
    keygen,
    sign,
    verify,
)

__all__ = [
    "Automorphism", "Gp", "GroupParams", "PlatformElement", "PlatformGroup",
    "SemidirectPair", "act", "compute_period", "enumerate_cycle", "s_value",
    "Signature", "SigningKey", "keygen", "sign", "verify",
    "encode_pk", "decode_pk", "encode_sk", "decode_sk", "encode_sig", "decode_sig",
]
