"""Tests the exact scalar sequences.
"""
import pytest
from fractions import Fraction

def test_bernoulli():
    """Tests the Bernoulli numbers, including the B_1 = -1/2 convention.
    """
    from eisdet.arith import bernoulli
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(6) == Fraction(1, 42)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert bernoulli(16) == Fraction(-3617, 510)
    for n in [3, 5, 7, 21]:
        assert bernoulli(n) == 0

    with pytest.raises(ValueError):
        bernoulli(-2)

def test_sigma():
    """Tests the divisor power sums.
    """
    from eisdet.arith import sigma
    assert sigma(3, 6) == 1 + 8 + 27 + 216
    assert sigma(11, 2) == 2049
    assert sigma(0, 12) == 6
    assert sigma(5, 1) == 1
    with pytest.raises(ValueError):
        sigma(3, 0)

def test_scale():
    """Tests the coefficient in front of sigma_{2n-1}(m) q^m.
    """
    from eisdet.arith import eisenstein_scale
    assert eisenstein_scale(4) == 240
    assert eisenstein_scale(6) == -504
    assert eisenstein_scale(8) == 480
    assert eisenstein_scale(12) == Fraction(65520, 691)

@pytest.mark.parametrize("n", range(1, 31))
def test_bernoulli_recurrence(n):
    """Tests sum_{k<=n} C(n+1, k) B_k = 0.
    """
    from math import comb
    from eisdet.arith import bernoulli
    assert sum(comb(n + 1, k)*bernoulli(k) for k in range(n + 1)) == 0

@pytest.mark.parametrize("k", [0, 1, 3, 5, 7, 11])
def test_sigma_multiplicative(k):
    """Tests sigma_k(mn) = sigma_k(m) sigma_k(n) for coprime m, n <= 50.
    """
    from math import gcd
    from eisdet.arith import sigma
    for m in range(1, 51):
        for n in range(1, 51):
            if gcd(m, n) == 1:
                assert sigma(k, m*n) == sigma(k, m)*sigma(k, n)

@pytest.mark.parametrize("k,n,expected", [(3, 2, 9), (5, 2, 33), (3, 1, 1),
                                          (1, 12, 28)])
def test_sigma_values(k, n, expected):
    """Tests small divisor sums.
    """
    from eisdet.arith import sigma
    assert sigma(k, n) == expected

def test_rational_strings(rng):
    """Tests that the "p/q" strings read back to the same rationals.
    """
    from eisdet.utility import to_fraction, rational_str
    for i in range(200):
        value = Fraction(int(rng.randint(-10**6, 10**6)),
                         int(rng.randint(1, 10**6)))
        text = rational_str(value)
        assert "." not in text
        assert to_fraction(text) == value
