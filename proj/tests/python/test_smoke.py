import pytest

import audioactive as aa


def test_sequence():
    assert aa.evolve("1", 7) == "1113213211"
    assert aa.jhc("3113") == "132113"
    assert aa.evolve("22", 50) == "22"


def test_exotic_literals():
    assert aa.jhc("4444444444") == "(10)4"


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        aa.jhc("12x")


def test_splitting():
    assert aa.split_atoms("22") == ["22"]
    s = aa.evolve("1", 9)
    assert "".join(aa.split_atoms(s)) == s
    assert not aa.splits_after("22", "1")
    assert aa.splits_after("4", "1")


def test_screen_examples():
    assert not aa.screen("1232")
    assert not aa.screen("3233", depth=2)
    assert aa.screen("1221", depth=8)


def test_table_and_spectrum(tmp_path, monkeypatch):
    monkeypatch.setenv("AUDIOACTIVE_CACHE_DIR", str(tmp_path))
    t = aa.periodic_table("1")
    assert len(t["elements"]) == 92
    lam, residual = aa.conway_constant()
    assert abs(lam - 1.303577269) < 5e-10
    assert residual < 1e-10
    ab = aa.abundances()
    assert abs(sum(a for _, _, a in ab) - 1e6) < 1e-6
    p = aa.char_poly()
    assert len(p) == 93 and p[-1] == 1


def test_longevity(tmp_path, monkeypatch):
    monkeypatch.setenv("AUDIOACTIVE_CACHE_DIR", str(tmp_path))
    assert aa.longevity("22") == 0
    with pytest.raises(aa.LongevityCapExceeded):
        aa.longevity("1", cap_days=2)


def test_cosmo_cap_is_not_proven(tmp_path, monkeypatch):
    monkeypatch.setenv("AUDIOACTIVE_CACHE_DIR", str(tmp_path))
    cert = aa.cosmo(generation_cap=2)
    assert cert["status"] == "NOT-PROVEN"
    assert [g["i"] for g in cert["generations"]] == [1, 2]
