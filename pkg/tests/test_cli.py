import json
import os
from fractions import Fraction

import pytest

import sl2hilb.cli as cli
from sl2hilb.cli import (FIXTURES, FixtureRow, HilbertResult, _int_in,
                         _int_out, load_cached, main, store_cached)
from sl2hilb.exactalg import rf_equal
from sl2hilb.repmodel import parse_rep


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("SL2HILB_CACHE_DIR", str(tmp_path / "cache"))
    return tmp_path / "cache"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_series_text(capsys):
    code, out, _ = run(capsys, "series", "V5")
    assert code == 0
    assert out.strip() == "(1 - t^6 + t^12)/(1-t^4)(1-t^6)(1-t^8)"


def test_series_trivial(capsys):
    code, out, _ = run(capsys, "series", "V0")
    assert code == 0
    assert out.strip() == "(1)/(1-t)"


def test_series_with_terms(capsys):
    code, out, _ = run(capsys, "series", "V4", "--terms", "10")
    assert code == 0
    assert "coefficients: 1, 0, 1, 1, 1, 1, 2, 1, 2, 2" in out


GOLDEN_V2_2V3 = {
    "a_invariant": -11,
    "denominator": [[2, 2], [3, 2], [4, 3], [5, 2]],
    "gamma": ["133/28800", "133/19200", "3253/345600", "1657/138240"],
    "methods": ["ClosedForm"] * 4,
    "numerator": [1, 0, 0, 1, 3, 4, 5, 8, 7, 3, 2, -2, -3, -7, -8, -5, -4,
                  -3, -1, 0, 0, -1],
    "pole_order": 8,
    "rep": [2, 3, 3],
    "version": "0.1.0",
}


def test_series_json_golden(capsys):
    code, out, _ = run(capsys, "series", "V2+2V3", "--format", "json")
    assert code == 0
    assert json.loads(out) == GOLDEN_V2_2V3


def test_json_round_trip():
    result = HilbertResult.from_json_dict(GOLDEN_V2_2V3)
    assert result.to_json_dict() == GOLDEN_V2_2V3
    rep = parse_rep("V2+2V3")
    from sl2hilb.series import hilbert_series
    assert rf_equal(result.series(), hilbert_series(rep))


def test_series_latex(capsys):
    code, out, _ = run(capsys, "series", "V2+V3", "--format", "latex")
    assert code == 0
    assert "\\frac" in out and "(1-t^{2})" in out


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "V2+V3", "--terms", "12")
    assert code == 0
    assert out.strip() == "1, 0, 1, 1, 2, 2, 3, 4, 5, 6, 8, 9"


def test_gamma_text(capsys):
    code, out, _ = run(capsys, "gamma", "V7")
    assert code == 0
    assert "11/11520" in out and "ClosedForm" in out
    assert "a          -8" in out


def test_gamma_rejects_trivial(capsys):
    code, _, err = run(capsys, "gamma", "V0+V2")
    assert code == 2
    assert "trivial" in err


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "series", "Vx")
    assert code == 2
    assert "position" in err


def test_usage_error_exit_code(capsys):
    assert main(["frobnicate"]) == 2


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "V3+V4", "--max-degree", "15",
                       "--draws", "2")
    assert code == 0
    assert "FAIL" not in out


def test_verify_seed_deterministic(capsys):
    _, out1, _ = run(capsys, "verify", "V2+V3", "--draws", "3", "--seed", "9")
    _, out2, _ = run(capsys, "verify", "V2+V3", "--draws", "3", "--seed", "9")
    assert out1 == out2


def test_table_all_rows(capsys):
    code, out, _ = run(capsys, "table")
    assert code == 0
    assert "16/16 rows match" in out


def test_table_reports_tampered_row(capsys, monkeypatch):
    bad = FIXTURES[4]
    tampered = FixtureRow(bad.key, bad.dim, bad.series,
                          (Fraction(1, 7),) + bad.gamma[1:], bad.a_invariant)
    monkeypatch.setattr(cli, "FIXTURES",
                        FIXTURES[:4] + [tampered] + FIXTURES[5:])
    code, out, _ = run(capsys, "table")
    assert code == 1
    assert "DIFF" in out and "15/16 rows match" in out


def test_cache_round_trip(isolated_cache, capsys):
    code, out1, _ = run(capsys, "series", "V2+V3")
    assert code == 0
    path = isolated_cache / "V2+V3.json"
    assert path.exists()
    # second call serves the cached result
    code, out2, _ = run(capsys, "series", "V2+V3")
    assert out1 == out2
    rep = parse_rep("V2+V3")
    cached = load_cached(rep)
    from sl2hilb.series import hilbert_series
    assert rf_equal(cached.series(), hilbert_series(rep))
    assert cached.gamma == (Fraction(1, 60), Fraction(1, 40),
                            Fraction(71, 720), Fraction(59, 288))


def test_cache_version_mismatch_recomputes(isolated_cache, capsys):
    run(capsys, "series", "V4")
    path = isolated_cache / "V4.json"
    data = json.loads(path.read_text())
    data["version"] = "0.0.0"
    path.write_text(json.dumps(data))
    assert load_cached(parse_rep("V4")) is None
    code, out, _ = run(capsys, "series", "V4")
    assert code == 0
    assert json.loads(path.read_text())["version"] != "0.0.0"


def test_no_cache_flag(isolated_cache, capsys):
    code, _, _ = run(capsys, "series", "V4", "--no-cache")
    assert code == 0
    assert not (isolated_cache / "V4.json").exists()


def test_store_cached_atomic(isolated_cache):
    rep = parse_rep("V2")
    result = HilbertResult.compute(rep)
    store_cached(rep, result)
    names = os.listdir(isolated_cache)
    assert names == ["V2.json"]      # no stray temp files


def test_big_int_serialization():
    big = 2 ** 70 + 3
    assert _int_out(big) == str(big)
    assert _int_out(-(2 ** 70)) == str(-(2 ** 70))
    assert _int_out(12) == 12
    assert _int_in(str(big)) == big
    assert _int_in(-5) == -5


def test_threads_flag(capsys):
    code, out, _ = run(capsys, "series", "V8", "--threads", "2")
    assert code == 0
    assert "(1-t^" in out
