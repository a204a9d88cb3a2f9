import os
import subprocess
from fractions import Fraction as F

import pytest

import patho


def test_expansion_round_trip():
    e = patho.to_expansion(F(1, 3), 3)
    assert e["text"] == "0.1"
    e = patho.to_expansion(F(-4, 3), 2)
    assert e["cycle"] == [0, 1]
    for x in (F(1, 7), F(-22, 9), F(5), F(0)):
        for base in (2, 3):
            e = patho.to_expansion(x, base)
            assert patho.from_expansion(base, e["sign"], e["integer_digits"], e["prefix"], e["cycle"]) == x
    with pytest.raises(ValueError):
        patho.from_expansion(3, 1, [], [], [2])


def test_projections():
    assert patho.proj_p((3, 2)) == (3, 0)
    assert patho.proj_q((F(-1, 2), 2)) == (0, 2)
    assert patho.classify_shift("p", (0, 1)) == ("period", (0, 0), None)
    assert patho.classify_shift("p", (-1, 1)) == ("quasiperiod", (-1, 0), "decreasing")
    assert patho.density_witness("p", 0, 1, 5, 6) == (F(11, 2), F(-7, 2))
    assert patho.surd_compare((F(140, 99), 0), (0, 1)) == -1


def test_h():
    assert patho.eval_h(F(226, 243)) == F(5, 8)
    assert patho.preimage_h(F(5, 8), F(1, 2), F(2, 3)) == F(3628, 6561)
    x = patho.preimage_h(F(-7, 3), F(-1, 10), F(1, 10), signed_mode=True)
    assert -F(1, 10) < x < F(1, 10)
    assert patho.eval_h(x, signed_mode=True) == F(-7, 3)
    with pytest.raises(ValueError):
        patho.preimage_h(-1, 0, 1)


def test_cantor():
    assert patho.basis_interval(0) == (0, 1)
    c0 = patho.place_cantor(0)
    assert (c0["c"], c0["d"], c0["t"]) == (F(1, 4), F(3, 4), 0)
    assert patho.decode_bits([], [0, 1]) == F(-4, 3)
    assert patho.decode_bits(*patho.encode_value(F(5, 2))) == F(5, 2)
    x, index = patho.preimage_f(F(-4, 3), 0, 1)
    assert 0 < x < 1
    assert patho.eval_f(x, index + 1) == (F(-4, 3), index, True)


def test_additive():
    basis = ["1", "sqrt:2"]
    p = [[1, 0], [0, 0]]
    assert patho.apply_map(basis, p, [3, 2]) == [3, 0]
    assert patho.kernel_basis(basis, p) == [[0, 1]]
    assert patho.rank(basis, p) == 1
    assert patho.surjection_witness(basis, [[0, 0], [0, 1]], [0, 1], 3, 4) == [2, 1]
    assert patho.real_compare(basis, [1, -1], [0, 0]) == "Less"
    assert patho.real_compare(["1", "opaque:pi"], [F(22, 7), 0], [0, 1]) == "Greater"
    with pytest.raises(ValueError):
        patho.kernel_basis(["sqrt:4"], [[1]])


def test_verify_is_deterministic():
    a = patho.verify("h-roundtrip", 200, 42)
    assert a["failures"] == []
    assert a == patho.verify("h-roundtrip", 200, 42)
    assert "additive-periodic-iff-noninjective" in patho.suite_names()
    with pytest.raises(ValueError):
        patho.verify("nosuch", 1, 1)


def test_run_cli_in_process():
    code, out, _ = patho.run_cli("eval", "--fn", "h", "--x", "226/243")
    assert (code, out) == (0, "5/8\n")
    code, _, err = patho.run_cli("verify", "nosuch")
    assert code == 2 and "unknown suite" in err


@pytest.mark.skipif(not os.environ.get("PATHO_CLI"), reason="PATHO_CLI not set")
def test_cli_binary():
    out = subprocess.run([os.environ["PATHO_CLI"], "hypo", "--fn", "recip", "--x", "2", "--y", "2/5"],
                         capture_output=True, text=True, check=True).stdout
    assert out == "true\n"
