"""Exact scalar sequences used throughout the package: Bernoulli numbers and
divisor power sums. Scalars are :class:`fractions.Fraction` everywhere.
"""
from fractions import Fraction
from functools import lru_cache
from math import comb
import threading

from sympy import divisor_sigma

_bernoulli = [Fraction(1)]
"""list: B_0, B_1, ... computed so far (B_1 = -1/2 convention)."""
_bernoulli_lock = threading.Lock()

def bernoulli(n):
    """Returns the Bernoulli number B_n for the generating function
    t/(e^t - 1) = sum B_n t^n / n!, so that B_1 = -1/2.

    Args:
        n (int): non-negative index.
    """
    if n < 0:
        raise ValueError("Bernoulli numbers are indexed from 0; got {}.".format(n))
    if n > 1 and n % 2 == 1:
        return Fraction(0)

    with _bernoulli_lock:
        #sum_{j<m} C(m+1, j) B_j + (m+1) B_m = 0
        for m in range(len(_bernoulli), n + 1):
            total = sum(comb(m + 1, j)*_bernoulli[j] for j in range(m))
            _bernoulli.append(-total/(m + 1))
        return _bernoulli[n]

@lru_cache(maxsize=None)
def sigma(k, n):
    """Returns the divisor power sum sigma_k(n) = sum_{d | n} d^k.

    Args:
        k (int): non-negative exponent.
        n (int): positive integer.
    """
    if n < 1:
        raise ValueError("sigma is defined for positive n; got {}.".format(n))
    return int(divisor_sigma(n, k))

def eisenstein_scale(two_n):
    """Returns the coefficient -4n/B_{2n} multiplying sigma_{2n-1}(m) q^m in
    the expansion of E_{2n}.

    Args:
        two_n (int): the weight 2n.
    """
    return Fraction(-2*two_n)/bernoulli(two_n)
