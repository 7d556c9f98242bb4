import json
from fractions import Fraction

import pytest

import rnpow


def test_round_nearest_ties():
    assert rnpow.round_nearest(Fraction(257, 256), 8) == 1
    assert rnpow.round_nearest("257/256", 8, mode="away") == Fraction(129, 128)


def test_fp_mul_direction():
    value, direction = rnpow.fp_mul("129/128", "129/128", 8)
    assert value == Fraction(65, 64)
    assert direction == "down"


def test_naive_power_trace():
    t = rnpow.naive_power("8473808/2^23", 24, 6)
    assert len(t["steps"]) == 5
    assert t["final"] == t["steps"][-1]
    assert set(t["directions"]) <= {"down", "exact", "up"}


def test_spot_error_binary64():
    e = rnpow.spot_error("4507062722867963/2^52", 53, 6)
    assert isinstance(e, Fraction)
    assert str(float(e)).startswith("4.78057")


def test_not_representable():
    with pytest.raises(ValueError):
        rnpow.spot_error(Fraction(1, 3), 24, 6)


def test_search_p8_row():
    r = rnpow.exhaustive_max_error(8, 3)
    assert r["argmax_x"] == Fraction(91, 64)
    assert r["violations"] == 0
    assert Fraction(135988, 100000) < r["max_error"] < Fraction(135989, 100000)


def test_bounds_and_n_max():
    b = rnpow.bounds(24, 3)
    u = Fraction(1, 2**24)
    assert b["simple"] == 2 * u
    assert b["gamma"] == 2 * u / (1 - 2 * u)
    assert rnpow.n_max(24) == 2088
    assert rnpow.n_max(113) == 51953580258461959


def test_adversary_factors():
    s = rnpow.build_sequence(24, 10)
    assert s["factors"][:3] == [Fraction(4097, 4096), Fraction(4097, 4096),
                                Fraction(8387583, 8388608)]
    assert s["verified"]
    assert 0 < s["gap"] < 1


def test_verify_and_cli():
    assert rnpow.verify("unit-power")["ok"]
    status, out = rnpow.run_cli(["bounds", "--p", "24", "--n", "2089",
                                 "--format", "json"])
    assert status == 0
    doc = json.loads(out)
    assert doc["n_max"] == 2088
    assert any("exceeds n_max(24) = 2088" in note for note in doc["notes"])
    status, _ = rnpow.run_cli(["search", "--p", "8"])
    assert status == 2
