import math
import subprocess
import sys

import pytest

from spdh.cli import main, formula_signature_bits
from spdh.signature import decode_pk, decode_sk


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_params_p3(capsys):
    code, out, _ = run(["params", "--p", "3", "-N", "16"], capsys)
    assert code == 0
    assert "|G_p| = 27" in out
    assert "|Aut(G_p)| = 54" in out
    assert "[2, 3, 6, 9, 18, 27, 54, 81, 162, 243, 486, 729]" in out


def test_params_p5_sizes(capsys):
    code, out, _ = run(["params", "--p", "5"], capsys)
    assert code == 0
    rows = {int(r.split("\t")[0]): r.split("\t") for r in out.splitlines() if r[:1].isdigit()}
    # width(25) = 1 byte, header 38, scalar width 1 for n <= 256, 2 beyond
    assert int(rows[25][1]) == 38 + 128 * (2 + 1)
    assert int(rows[3125][1]) == 38 + 128 * (2 + 2)


def test_params_rejects_non_odd_prime(capsys):
    for p in ("2", "9", "1"):
        code, _, err = run(["params", "--p", p], capsys)
        assert code == 2 and "odd prime" in err


def test_formula_bits():
    assert formula_signature_bits(3, 9, 1) == pytest.approx(10 * math.log2(3))
    assert formula_signature_bits(5, 100, 2) == pytest.approx(2 * (10 * math.log2(5) + 2))
    assert formula_signature_bits(7, 5, 1) is None


def keygen_args(prefix, seed="00ff"):
    return ["keygen", "--p", "3", "--g", "1,1", "--conjugator", "4,1", "-N", "16",
            "--insecure", "--out", str(prefix), "--seed", seed]


def test_keygen_sign_verify(tmp_path, capsys):
    prefix = tmp_path / "k"
    code, out, _ = run(keygen_args(prefix), capsys)
    assert code == 0 and "n = 9" in out and "in candidate set = True" in out
    assert decode_sk((tmp_path / "k.sk").read_bytes()).public == decode_pk((tmp_path / "k.pk").read_bytes())

    sig = tmp_path / "m.sig"
    assert main(["sign", "--key", str(prefix) + ".sk", "--msg", "hi", "--out", str(sig)]) == 0
    code, out, _ = run(["verify", "--pub", str(prefix) + ".pk", "--sig", str(sig), "--msg", "hi"], capsys)
    assert code == 0 and out.strip() == "Accept"
    code, out, err = run(["verify", "--pub", str(prefix) + ".pk", "--sig", str(sig), "--msg", "ho"], capsys)
    assert code == 1 and out.strip() == "Reject" and err

    msg = tmp_path / "m.bin"
    msg.write_bytes(b"hi")
    code, _, _ = run(["verify", "--pub", str(prefix) + ".pk", "--sig", str(sig), "--msg-file", str(msg)], capsys)
    assert code == 0

    (tmp_path / "bad.sig").write_bytes(b"garbage")
    code, _, err = run(["verify", "--pub", str(prefix) + ".pk", "--sig", str(tmp_path / "bad.sig"),
                        "--msg", "hi"], capsys)
    assert code == 2 and "malformed" in err
    code, _, _ = run(["verify", "--pub", str(tmp_path / "missing.pk"), "--sig", str(sig), "--msg", "hi"], capsys)
    assert code == 2


def test_keygen_deterministic(tmp_path, capsys):
    outs = []
    for name in ("a", "b"):
        assert main(keygen_args(tmp_path / name)) == 0
        outs.append(((tmp_path / f"{name}.sk").read_bytes(), (tmp_path / f"{name}.pk").read_bytes()))
    assert outs[0] == outs[1]
    assert main(keygen_args(tmp_path / "c", seed="01")) == 0
    assert (tmp_path / "c.sk").read_bytes() != outs[0][0]


def test_keygen_errors(tmp_path, capsys):
    base = ["keygen", "--p", "3", "--out", str(tmp_path / "k")]
    code, _, err = run(base + ["--g", "1,1", "--conjugator", "4,1"], capsys)
    assert code == 1 and "floor" in err
    code, _, err = run(base + ["--g", "1,0", "--conjugator", "4,1", "--insecure"], capsys)
    assert code == 2 and "identity" in err
    code, _, _ = run(base + ["--g", "2,0", "--conjugator", "4,1"], capsys)
    assert code == 2
    code, _, _ = run(base, capsys)
    assert code == 2
    code, _, _ = run(base + ["--random", "--insecure", "--seed", "zz"], capsys)
    assert code == 2


def test_keygen_random_mid_size(tmp_path, capsys):
    code, out, _ = run(["keygen", "--p", "2147483647", "--random", "-N", "8", "--seed", "0102",
                        "--out", str(tmp_path / "m")], capsys)
    assert code == 0 and "in candidate set = True" in out


def test_selftest(capsys):
    code, out, _ = run(["selftest"], capsys)
    assert code == 0
    assert out.count("PASS") == 8 and "FAIL" not in out


def test_attack(tmp_path, capsys):
    prefix = tmp_path / "k"
    main(keygen_args(prefix))
    capsys.readouterr()
    key = decode_sk((tmp_path / "k.sk").read_bytes())
    code, out, _ = run(["attack", "--pub", str(prefix) + ".pk"], capsys)
    assert code == 0
    line = next(r for r in out.splitlines() if r.startswith("secret scalars"))
    assert tuple(int(v) for v in line.split("=")[1].split(",")) == key.secret.scalars

    code, out, _ = run(["attack", "--p", "3", "--g", "1,1", "--conjugator", "4,1", "--target", "1,4"], capsys)
    assert code == 0 and "x = 4" in out and "seconds" in out
    code, _, err = run(["attack", "--p", "3", "--g", "1,1", "--conjugator", "4,1", "--target", "1,4",
                        "--limit", "3"], capsys)
    assert code == 1 and "limit" in err
    code, _, _ = run(["attack", "--p", "3"], capsys)
    assert code == 2


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "spdh", "params", "--p", "3", "-N", "4"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and "|G_p| = 27" in out.stdout
