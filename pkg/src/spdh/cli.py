"""Command-line front end.

Exit codes: 0 success / accept, 1 reject or failed check, 2 usage or format error.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from pathlib import Path

from . import selftest
from .cryptanalysis import BRUTE_FORCE_LIMIT, SdlpInstance, solve_sdlp_bruteforce
from .platform import Gp
from .ring import SeededEntropy, is_prime, sample_below, system_entropy
from .semidirect import SemidirectPair, period_report, candidate_periods
from .sigma import PeriodTooSmall
from .signature import (
    DEFAULT_ROUNDS,
    DecodeError,
    decode_pk,
    decode_sig,
    decode_sk,
    encode_pk,
    encode_sig,
    encode_sk,
    keygen,
    public_key_length,
    secret_key_length,
    sign,
    signature_length,
    verify,
)

EXIT_OK, EXIT_REJECT, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _err(msg: str):
    print(f"spdh: {msg}", file=sys.stderr)


def _entropy(seed: str | None):
    if seed is None:
        return system_entropy
    try:
        return SeededEntropy(bytes.fromhex(seed))
    except ValueError:
        raise UsageError("--seed must be hex") from None


def _prime(p: int) -> Gp:
    if p < 3 or not is_prime(p) or p >= 2**64:
        raise UsageError(f"p must be an odd prime below 2^64, got {p}")
    return Gp.of(p)


def _element(G: Gp, text: str, what: str):
    try:
        a, b = (int(t, 0) for t in text.split(","))
        return G.element(a, b)
    except ValueError as exc:
        raise UsageError(f"{what}: expected 'a,b' with a = 1 mod p ({exc})") from None


def _message(args) -> bytes:
    if args.msg is not None:
        return args.msg.encode()
    try:
        return Path(args.msg_file).read_bytes()
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(str(exc)) from None


def formula_signature_bits(p: int, n: int, rounds: int) -> float | None:
    """N((8+i) log p + j log(p-1)) for n = p^i (p-1)^j, or None if n has another shape."""
    for j in (0, 1):
        rest = n // (p - 1) ** j if n % (p - 1) ** j == 0 else None
        if rest is None:
            continue
        i = round(math.log(rest, p)) if rest > 1 else 0
        if p**i == rest:
            return rounds * ((8 + i) * math.log2(p) + j * math.log2(p - 1))
    return None


def cmd_params(args) -> int:
    G = _prime(args.p)
    p, N = G.p, args.rounds
    print(f"p = {p}")
    print(f"|G_p| = {p**3}")
    print(f"|Aut(G_p)| = {(p - 1) * p**3}")
    print(f"candidate periods = {sorted(candidate_periods(p))}")
    print(f"rounds N = {N}")
    print(f"public key bytes = {public_key_length(p, N)}")
    print("n\tsig_bytes\tsk_bytes\tformula_bits")
    for n in sorted(candidate_periods(p)):
        bits = formula_signature_bits(p, n, N)
        print(f"{n}\t{signature_length(p, n, N)}\t{secret_key_length(p, n, N)}\t{bits:.1f}")
    return EXIT_OK


def _random_pair(G: Gp, rng, insecure: bool) -> SemidirectPair:
    p = G.p
    for _ in range(1000):
        g = G.element(1 + p * sample_below(p, rng), sample_below(p * p, rng))
        h = G.element(1 + p * sample_below(p, rng), sample_below(p * p, rng))
        pair = SemidirectPair.from_conjugator(g, h)
        if period_report(pair).n >= (2 if insecure else 2**30):
            return pair
    raise UsageError("could not find a pair with a usable period; try a larger p")


def cmd_keygen(args) -> int:
    G = _prime(args.p)
    rng = _entropy(args.seed)
    if args.random:
        pair = _random_pair(G, rng, args.insecure)
    else:
        if args.g is None or args.conjugator is None:
            raise UsageError("keygen needs --g and --conjugator, or --random")
        pair = SemidirectPair.from_conjugator(_element(G, args.g, "--g"),
                                              _element(G, args.conjugator, "--conjugator"))
    if pair.g == G.identity():
        raise UsageError("g is the identity; the pair has period 1")
    report = period_report(pair)
    try:
        key = keygen(pair, rng, rounds=args.rounds, insecure=args.insecure)
    except PeriodTooSmall as exc:
        _err(str(exc))
        return EXIT_REJECT
    Path(args.out + ".sk").write_bytes(encode_sk(key))
    Path(args.out + ".pk").write_bytes(encode_pk(key.public))
    print(f"n = {report.n}")
    print(f"in candidate set = {report.in_candidate_set}")
    print(f"wrote {args.out}.sk {args.out}.pk")
    return EXIT_OK


def cmd_sign(args) -> int:
    try:
        key = decode_sk(_read(args.key))
    except DecodeError as exc:
        raise UsageError(f"bad secret key file: {exc}") from None
    sig = sign(_message(args), key, _entropy(args.seed))
    Path(args.out).write_bytes(encode_sig(sig, key.public))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        pk = decode_pk(_read(args.pub))
        sig = decode_sig(_read(args.sig), pk)
    except DecodeError as exc:
        raise UsageError(f"malformed input: {exc}") from None
    verdict = verify(_message(args), sig, pk)
    if verdict:
        print("Accept")
        return EXIT_OK
    print("Reject")
    _err(verdict.reason)
    return EXIT_REJECT


def cmd_selftest(args) -> int:
    failed = 0
    for name, ok in selftest.run():
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        failed += not ok
    return EXIT_REJECT if failed else EXIT_OK


def cmd_attack(args) -> int:
    start = time.perf_counter()
    try:
        if args.pub is not None:
            pk = decode_pk(_read(args.pub))
            if pk.n > args.limit:
                _err(f"period {pk.n} exceeds the brute-force limit {args.limit}")
                return EXIT_REJECT
            n = pk.n
            recovered = []
            for X, Y in zip(pk.bases, pk.targets):
                x = solve_sdlp_bruteforce(SdlpInstance(pk.pair, X), args.limit)
                y = solve_sdlp_bruteforce(SdlpInstance(pk.pair, Y), args.limit)
                recovered.append((y - x) % n)
            print(f"n = {n}")
            print("secret scalars = " + ",".join(map(str, recovered)))
        else:
            if None in (args.p, args.g, args.conjugator, args.target):
                raise UsageError("attack needs --pub, or all of --p --g --conjugator --target")
            G = _prime(args.p)
            pair = SemidirectPair.from_conjugator(_element(G, args.g, "--g"),
                                                  _element(G, args.conjugator, "--conjugator"))
            if pair.period > args.limit:
                _err(f"period {pair.period} exceeds the brute-force limit {args.limit}")
                return EXIT_REJECT
            target = _element(G, args.target, "--target")
            print(f"n = {pair.period}")
            print(f"x = {solve_sdlp_bruteforce(SdlpInstance(pair, target), args.limit)}")
    except DecodeError as exc:
        raise UsageError(f"bad public key file: {exc}") from None
    except ValueError as exc:
        _err(str(exc))
        return EXIT_REJECT
    print(f"seconds = {time.perf_counter() - start:.3f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="spdh", description="Semidirect-product group-action signatures")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("params", help="report group, period candidates and sizes for a prime")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--rounds", "-N", type=int, default=DEFAULT_ROUNDS)
    sp.set_defaults(func=cmd_params)

    sp = sub.add_parser("keygen", help="generate a key pair")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--g", help="platform element a,b")
    sp.add_argument("--conjugator", help="conjugating element h as a,b")
    sp.add_argument("--random", action="store_true", help="sample g and h")
    sp.add_argument("--rounds", "-N", type=int, default=DEFAULT_ROUNDS)
    sp.add_argument("--insecure", action="store_true", help="allow periods below 2^30")
    sp.add_argument("--out", required=True, help="output prefix; writes PREFIX.sk and PREFIX.pk")
    sp.add_argument("--seed", help="hex seed for a deterministic entropy stream")
    sp.set_defaults(func=cmd_keygen)

    for name, func in (("sign", cmd_sign), ("verify", cmd_verify)):
        sp = sub.add_parser(name)
        if name == "sign":
            sp.add_argument("--key", required=True)
            sp.add_argument("--out", required=True)
            sp.add_argument("--seed")
        else:
            sp.add_argument("--pub", required=True)
            sp.add_argument("--sig", required=True)
        msg = sp.add_mutually_exclusive_group(required=True)
        msg.add_argument("--msg")
        msg.add_argument("--msg-file")
        sp.set_defaults(func=func)

    sp = sub.add_parser("selftest", help="run the exhaustive p=3 / p=5 invariant suite")
    sp.set_defaults(func=cmd_selftest)

    sp = sub.add_parser("attack", help="brute-force SDLP at toy scale")
    sp.add_argument("--pub")
    sp.add_argument("--p", type=int)
    sp.add_argument("--g")
    sp.add_argument("--conjugator")
    sp.add_argument("--target")
    sp.add_argument("--limit", type=int, default=BRUTE_FORCE_LIMIT)
    sp.set_defaults(func=cmd_attack)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        _err(str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
