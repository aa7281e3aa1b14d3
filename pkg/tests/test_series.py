"""Tests the truncated power series ring.
"""
import pytest
from fractions import Fraction

def _series(rng, order, var="q"):
    from eisdet.series import QSeries
    return QSeries([Fraction(int(rng.randint(-40, 41)), int(rng.randint(1, 7)))
                    for i in range(order)], order, var)

def test_axioms(rng):
    """Tests commutativity, associativity and distributivity on random
    series.
    """
    for i in range(40):
        order = 32 if i % 4 == 0 else int(rng.randint(1, 33))
        a, b, c = [_series(rng, order) for j in range(3)]
        assert a + b == b + a
        assert a*b == b*a
        assert (a*b)*c == a*(b*c)
        assert a*(b + c) == a*b + a*c
        assert (a - a).is_zero()

def test_truncation(rng):
    """Tests that truncating before or after multiplying agrees.
    """
    a, b = _series(rng, 12), _series(rng, 12)
    product = a*b
    for M in range(1, 13):
        assert (a.truncate(M)*b.truncate(M)).coeffs == product.truncate(M).coeffs

def test_orders():
    """Tests that results keep the smaller of two orders.
    """
    from eisdet.series import QSeries
    a = QSeries([1, 2, 3], 6)
    b = QSeries([1, 1], 4)
    assert (a + b).order == 4
    assert (a*b).order == 4
    assert a.coeffs == (1, 2, 3, 0, 0, 0)
    assert (a + 2).coeffs[0] == 3
    assert (3 - a).coeffs[:2] == (2, -2)

def test_invert(rng):
    """Tests the inverse of unit series.
    """
    from eisdet.series import QSeries, one
    from eisdet.exceptions import ValuationError
    for i in range(20):
        a = _series(rng, 10)
        if a[0] == 0:
            continue
        assert a*a.invert() == one(10)
        assert (a/a).coeffs == one(10).coeffs

    with pytest.raises(ValuationError) as info:
        QSeries([0, 1, 2], 3).invert()
    assert info.value.index == 0

def test_variables():
    """Tests that series in q and w cannot be mixed.
    """
    from eisdet.series import QSeries
    from eisdet.exceptions import VariableError
    with pytest.raises(VariableError):
        QSeries([1, 1], 2, "q") + QSeries([1, 1], 2, "w")
    with pytest.raises(VariableError):
        QSeries([1], 1, "t")

def test_shifts():
    """Tests division and multiplication by powers of the variable.
    """
    from eisdet.series import QSeries
    from eisdet.exceptions import ValuationError, InsufficientOrderError
    a = QSeries([0, 0, 5, 1], 6)
    assert a.valuation() == 2
    b = a.shift_down(2)
    assert b.coeffs == (5, 1, 0, 0)
    assert b.shift_up(2).coeffs == a.coeffs

    with pytest.raises(ValuationError) as info:
        a.shift_down(3)
    assert info.value.index == 2
    with pytest.raises(InsufficientOrderError):
        a.shift_down(7)
    with pytest.raises(InsufficientOrderError):
        a.truncate(8)
    assert QSeries([], 5).valuation() is None

def test_dilate():
    """Tests q -> q^k and the q/w conversions.
    """
    from eisdet.series import QSeries
    from eisdet.exceptions import ValuationError, VariableError
    a = QSeries([1, 2, 3], 3)
    d = a.dilate(3)
    assert d.order == 9
    assert d.coeffs == (1, 0, 0, 2, 0, 0, 3, 0, 0)

    w = a.inflate()
    assert w.var == "w"
    assert w.coeffs == (1, 0, 2, 0, 3, 0)
    assert w.deflate().coeffs == a.coeffs

    odd = QSeries([1, 0, 2, 7], 4, "w")
    with pytest.raises(ValuationError) as info:
        odd.deflate()
    assert info.value.index == 3
    with pytest.raises(VariableError):
        a.deflate()

def test_sqrt():
    """Tests square roots of c*x^(2v)*(unit).
    """
    from eisdet.series import QSeries
    from eisdet.exceptions import SquareRootError
    s = QSeries([1, 3, Fraction(1, 2), -2], 6)
    assert (s*s).sqrt_unit_times_monomial() == s

    t = (s*s).shift_up(2)*4
    root = t.sqrt_unit_times_monomial((4, 2))
    assert root.order == 7
    assert root == (s*2).shift_up(1)

    with pytest.raises(SquareRootError):
        QSeries([0, 1, 1], 3).sqrt_unit_times_monomial()
    with pytest.raises(SquareRootError):
        QSeries([2, 1], 2).sqrt_unit_times_monomial()
    with pytest.raises(SquareRootError):
        t.sqrt_unit_times_monomial((16, 2))
    with pytest.raises(SquareRootError):
        QSeries([], 4).sqrt_unit_times_monomial()

def test_euler():
    """Tests the pentagonal expansion of the Euler product against the
    termwise product.
    """
    from eisdet.series import euler_product, euler_product_naive
    assert euler_product(64) == euler_product_naive(64)
    assert euler_product(8).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)

def test_eta24():
    """Tests the first Ramanujan tau values.
    """
    from eisdet.series import eta24
    assert eta24(5).coeffs == (0, 1, -24, 252, -1472)
    tau = eta24(13)
    assert tau[12] == -370944
    assert tau[11] == 534612

def test_powers(rng):
    """Tests integer powers by repeated squaring.
    """
    a = _series(rng, 8)
    expected = _series(rng, 8)**0
    for e in range(9):
        assert a**e == expected
        expected = expected*a
    assert (a**0).coeffs[0] == 1
    with pytest.raises(ValueError):
        a**-1

def test_str():
    """Tests the readable form.
    """
    from eisdet.series import QSeries
    assert str(QSeries([1, -24], 3)) == "1 + (-24)*q + O(q^3)"
