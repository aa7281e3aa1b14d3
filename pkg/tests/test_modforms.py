"""Tests the named q-expansions and their cache.
"""
import pytest
from fractions import Fraction

def test_eisenstein():
    """Tests the first coefficients of E4, E6 and E12.
    """
    from eisdet.modforms import eisenstein
    E4 = eisenstein(4, 4)
    assert E4.weight == 4
    assert E4.coeffs == (1, 240, 2160, 6720)
    assert eisenstein(6, 3).coeffs == (1, -504, -16632)
    assert eisenstein(12, 2).coeffs[1] == Fraction(65520, 691)

def test_weights():
    """Tests that E2 and odd or small weights are rejected.
    """
    from eisdet.modforms import eisenstein
    from eisdet.exceptions import WeightError
    with pytest.raises(WeightError) as info:
        eisenstein(2, 10)
    assert "-3/(pi*y)" in info.value.message
    for w in [0, 5, -4]:
        with pytest.raises(WeightError):
            eisenstein(w, 10)

def test_relations():
    """Tests the classical relations in low weight to order 64.
    """
    from eisdet.modforms import eisenstein
    E4, E6 = eisenstein(4, 64), eisenstein(6, 64)
    assert eisenstein(8, 64) == E4*E4
    assert eisenstein(10, 64) == E4*E6
    assert eisenstein(14, 64) == E4*E4*E6
    assert eisenstein(12, 64)*691 == E4**3*441 + E6**2*250

def test_weighted():
    """Tests the weight bookkeeping of products and sums.
    """
    from eisdet.modforms import eisenstein
    from eisdet.exceptions import WeightError
    E4, E6 = eisenstein(4, 10), eisenstein(6, 10)
    assert (E4*E6).weight == 10
    assert (E4**3).weight == 12
    with pytest.raises(WeightError):
        E4 + E6

def test_delta():
    """Tests that the eta product equals (E4^3 - E6^2)/1728.
    """
    from eisdet.modforms import delta, delta_unit
    product = delta(64)
    assert product.weight == 12
    assert product == delta(64, "formula")
    assert delta(5).coeffs == (0, 1, -24, 252, -1472)
    assert delta_unit(5).coeffs == (1, -24, 252, -1472, 4830)
    with pytest.raises(ValueError):
        delta(5, "theta")

def test_thetas():
    """Tests the theta constants against their squares.
    """
    from eisdet.modforms import theta_fourth_powers
    t24, t34, t22, t32 = theta_fourth_powers(20)
    assert t34.coeffs[:5] == (1, 8, 24, 32, 24)
    assert t24.coeffs[:4] == (0, 16, 0, 64)
    assert (t22*t22).deflate() == t24
    assert (t32*t32).deflate() == t34

def test_elliptic():
    """Tests k^2, z^2 and the relation E4(q^2) = z^4 (1 - k^2 + k^4).
    """
    from eisdet.modforms import elliptic_params, eisenstein
    k2, z2, k, z = elliptic_params(40)
    assert k2.coeffs[:4] == (0, 16, -128, 704)
    assert k.var == "w" and z.var == "w"
    assert k.coeffs[:2] == (0, 4)
    assert (k*k).deflate() == k2
    assert (z*z).deflate() == z2

    target = eisenstein(4, 20).series.dilate(2)
    assert z2**2*(1 - k2 + k2*k2) == target

def test_named():
    """Tests the command-line series names.
    """
    from eisdet.modforms import named_series
    assert named_series("delta", 5).coeffs == (0, 1, -24, 252, -1472)
    assert named_series("E4", 3).coeffs == (1, 240, 2160)
    assert named_series("k2", 3).coeffs == (0, 16, -128)
    assert named_series("theta3_4", 3).coeffs == (1, 8, 24)
    with pytest.raises(ValueError):
        named_series("E", 3)

def test_cache():
    """Tests that shorter requests are served from longer expansions.
    """
    from eisdet.modforms import eisenstein, clear_cache, _cache
    clear_cache()
    long = eisenstein(4, 30)
    assert _cache["E4"].order == 30
    short = eisenstein(4, 10)
    assert short.order == 10
    assert short.coeffs == long.coeffs[:10]
    assert _cache["E4"].order == 30

def test_persisted(tmpdir, monkeypatch):
    """Tests that named series are written to and read back from
    MODFORMS_CACHE_DIR.
    """
    from os import path
    from eisdet import base
    from eisdet.modforms import eisenstein, clear_cache
    root = str(tmpdir)
    monkeypatch.setenv("MODFORMS_CACHE_DIR", root)
    monkeypatch.setattr(base, "testmode", False)

    clear_cache()
    first = eisenstein(6, 12)
    assert path.isfile(path.join(root, "series", "E6.json"))

    clear_cache()
    again = eisenstein(6, 8)
    assert again.coeffs == first.coeffs[:8]
    clear_cache()
