"""Tests the custom eisdet exceptions.
"""
import pytest

def test_message():
    """Tests that every exception keeps its message.
    """
    from eisdet import exceptions as ex
    for cls in [ex.VariableError, ex.SquareRootError, ex.WeightError,
                ex.ZeroDeterminantError, ex.RepeatedIndexError,
                ex.UnknownIdentityError, ex.ConfigError, ex.LogicError]:
        with pytest.raises(cls) as info:
            raise cls("Test of {}.".format(cls.__name__))
        assert info.value.message == "Test of {}.".format(cls.__name__)
        assert isinstance(info.value, ex.Error)

def test_valuation():
    """Tests that valuation errors carry the offending index.
    """
    from eisdet.exceptions import ValuationError
    with pytest.raises(ValuationError) as info:
        raise ValuationError("Nonzero coefficient.", index=3)
    assert info.value.index == 3

def test_span():
    """Tests that span errors carry the first mismatching power.
    """
    from eisdet.exceptions import NotInSpanError
    with pytest.raises(NotInSpanError) as info:
        raise NotInSpanError("Not a modular form.", index=5)
    assert info.value.index == 5

def test_order():
    """Tests that order errors carry the minimum order.
    """
    from eisdet.exceptions import InsufficientOrderError
    with pytest.raises(InsufficientOrderError) as info:
        raise InsufficientOrderError("Too short.", minimum=14)
    assert info.value.minimum == 14
