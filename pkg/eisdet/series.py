"""Truncated formal power series in one variable with exact coefficients.

A :class:`QSeries` knows the first `order` coefficients of a power series in
one of three variables: the nome `q`, its square root `w` (q = w^2), or the
variable `v` = u^2 used for elliptic-function expansions. Coefficients are
:class:`fractions.Fraction` by default; any commutative ring whose elements
support `+`, `-`, `*` and comparison with integers can be used instead by
passing its zero element.
"""
from fractions import Fraction
from math import isqrt, lcm

from eisdet.exceptions import (VariableError, ValuationError, SquareRootError,
                               InsufficientOrderError)
from eisdet.utility import to_fraction

variables = ("q", "w", "v")
"""tuple: allowed variable tags."""

class QSeries(object):
    """A power series truncated at `order`: coefficients with indices
    `0 .. order-1` are exact, everything beyond is unknown.

    Args:
        coeffs (list): leading coefficients; padded with zeros or cut to
          `order`.
        order (int): truncation order; defaults to `len(coeffs)`.
        var (str): one of :data:`variables`.
        zero: zero element of the coefficient ring; `None` selects the
          rationals and coerces every coefficient to `Fraction`.

    Attributes:
        order (int): number of significant coefficients.
        var (str): variable tag.
    """
    __hash__ = None

    def __init__(self, coeffs, order=None, var="q", zero=None):
        if var not in variables:
            raise VariableError("Unknown series variable '{}'.".format(var))
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs)
        if order < 0:
            raise ValueError("Truncation order must be non-negative.")

        self.var = var
        self.order = order
        self.rational = zero is None or isinstance(zero, Fraction)
        if self.rational:
            self.zero = Fraction(0)
            coeffs = [to_fraction(c) for c in coeffs[:order]]
        else:
            self.zero = zero
            coeffs = coeffs[:order]
        coeffs.extend([self.zero]*(order - len(coeffs)))
        self._coeffs = tuple(coeffs)

    @property
    def coeffs(self):
        """tuple: the `order` known coefficients."""
        return self._coeffs

    @property
    def one(self):
        """Multiplicative identity of the coefficient ring."""
        return self.zero + 1

    def __getitem__(self, index):
        return self._coeffs[index]

    def __len__(self):
        return self.order

    def _like(self, coeffs, order=None, var=None):
        return QSeries(coeffs, self.order if order is None else order,
                       self.var if var is None else var,
                       None if self.rational else self.zero)

    def _check(self, other):
        if self.var != other.var:
            raise VariableError("Cannot combine a series in {} with a series "
                                "in {}.".format(self.var, other.var))

    def __str__(self):
        terms = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("({})*{}".format(c, self.var))
            else:
                terms.append("({})*{}^{}".format(c, self.var, i))
        terms.append("O({}^{})".format(self.var, self.order))
        return " + ".join(terms)

    def __repr__(self):
        return "QSeries({})".format(self)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.first_difference(other) is None

    def __add__(self, other):
        if isinstance(other, QSeries):
            self._check(other)
            order = min(self.order, other.order)
            return self._like([a + b for a, b in zip(self._coeffs[:order],
                                                     other._coeffs[:order])],
                              order)
        if self.order == 0:
            return self
        return self._like((self._coeffs[0] + other,) + self._coeffs[1:])

    __radd__ = __add__

    def __neg__(self):
        return self._like([-c for c in self._coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QSeries):
            self._check(other)
            order = min(self.order, other.order)
            if self.rational and other.rational:
                coeffs = _rational_convolve(self._coeffs, other._coeffs, order)
            else:
                coeffs = _convolve(self._coeffs, other._coeffs, order, self.zero)
            return self._like(coeffs, order)
        return self._like([c*other for c in self._coeffs])

    def __rmul__(self, other):
        return self._like([other*c for c in self._coeffs])

    def __truediv__(self, scalar):
        if isinstance(scalar, QSeries):
            return self * scalar.invert()
        return self * (Fraction(1)/to_fraction(scalar))

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("Series powers must be non-negative integers.")
        result = self._like([self.one])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def invert(self):
        """Returns the multiplicative inverse of a unit series.

        Raises:
            ValuationError: when the constant term is zero (or, for
              non-rational coefficients, not equal to one).
        """
        if self.order == 0:
            return self
        c0 = self._coeffs[0]
        if c0 == 0:
            raise ValuationError("Cannot invert a series with zero constant "
                                 "term.", index=0)
        if self.rational:
            inv0 = Fraction(1)/c0
        elif c0 == 1:
            inv0 = c0
        else:
            raise ValuationError("Only series with constant term 1 can be "
                                 "inverted over this coefficient ring.", index=0)

        a = self._coeffs
        b = [inv0]
        for n in range(1, self.order):
            s = self.zero
            for k in range(1, n + 1):
                if a[k] != 0:
                    s = s + a[k]*b[n - k]
            b.append(-(inv0*s))
        return self._like(b)

    def valuation(self):
        """Returns the index of the first nonzero coefficient, or `None` if
        every known coefficient vanishes.
        """
        for i, c in enumerate(self._coeffs):
            if c != 0:
                return i
        return None

    def is_zero(self):
        return self.valuation() is None

    def first_difference(self, other):
        """Returns the first index below the common order where `self` and
        `other` differ, or `None` when they agree.
        """
        self._check(other)
        for i in range(min(self.order, other.order)):
            if self._coeffs[i] != other._coeffs[i]:
                return i
        return None

    def truncate(self, order):
        """Returns the series cut to a smaller truncation order."""
        if order > self.order:
            raise InsufficientOrderError("Cannot extend a series known to "
                                         "order {} to order {}.".format(
                                             self.order, order),
                                         minimum=order)
        return self._like(self._coeffs[:order], order)

    def shift_down(self, v):
        """Divides by x^v; the first `v` coefficients must vanish.

        Raises:
            ValuationError: with the index of the first nonzero coefficient
              below `v`.
        """
        if v > self.order:
            raise InsufficientOrderError("Cannot divide a series known to "
                                         "order {} by {}^{}.".format(
                                             self.order, self.var, v),
                                         minimum=v)
        for i in range(v):
            if self._coeffs[i] != 0:
                raise ValuationError("Coefficient of {}^{} is nonzero; cannot "
                                     "divide by {}^{}.".format(self.var, i,
                                                               self.var, v),
                                     index=i)
        return self._like(self._coeffs[v:], self.order - v)

    def shift_up(self, v):
        """Multiplies by x^v."""
        return self._like([self.zero]*v + list(self._coeffs), self.order + v)

    def dilate(self, k):
        """Substitutes x -> x^k in the same variable; the order becomes
        `k*order`.
        """
        if k < 1:
            raise ValueError("Dilation factor must be positive.")
        coeffs = [self.zero]*(k*self.order)
        for i, c in enumerate(self._coeffs):
            coeffs[k*i] = c
        return self._like(coeffs, k*self.order)

    def inflate(self):
        """Rewrites a series in q as a series in w with q = w^2."""
        if self.var != "q":
            raise VariableError("Only series in q can be inflated.")
        dilated = self.dilate(2)
        return dilated._like(dilated.coeffs, dilated.order, "w")

    def deflate(self):
        """Rewrites a series in w whose odd coefficients vanish as a series in
        q = w^2.

        Raises:
            ValuationError: with the index of the first nonzero odd
              coefficient.
        """
        if self.var != "w":
            raise VariableError("Only series in w can be deflated.")
        for i in range(1, self.order, 2):
            if self._coeffs[i] != 0:
                raise ValuationError("Coefficient of w^{} is nonzero; the "
                                     "series is not a series in q.".format(i),
                                     index=i)
        return self._like(self._coeffs[::2], (self.order + 1)//2, "q")

    def sqrt_unit_times_monomial(self, leading=None):
        """Returns the square root of c*x^(2v)*(unit series) on the branch
        sqrt(c)*x^v*(1 + ...).

        Args:
            leading (tuple): optional `(c, 2v)` asserting the leading
              coefficient and exponent.

        Raises:
            SquareRootError: for a zero series, an odd valuation, a leading
              coefficient that is not the square of a rational or a mismatch
              with `leading`.
        """
        if not self.rational:
            raise SquareRootError("Square roots need rational coefficients.")
        v2 = self.valuation()
        if v2 is None:
            raise SquareRootError("The series has no nonzero coefficient "
                                  "below order {}.".format(self.order))
        c = self._coeffs[v2]
        if leading is not None:
            lc, lv = to_fraction(leading[0]), leading[1]
            if lv != v2 or lc != c:
                raise SquareRootError("Expected leading term ({})*{}^{}, found "
                                      "({})*{}^{}.".format(lc, self.var, lv, c,
                                                           self.var, v2))
        if v2 % 2 == 1:
            raise SquareRootError("Valuation {} is odd.".format(v2))
        root_c = _rational_sqrt(c)

        unit = self.shift_down(v2) * (Fraction(1)/c)
        u = unit._coeffs
        r = [Fraction(1)]
        for n in range(1, unit.order):
            s = sum((r[k]*r[n - k] for k in range(1, n)), Fraction(0))
            r.append((u[n] - s)/2)
        return (self._like(r, unit.order)*root_c).shift_up(v2//2)

def _rational_sqrt(c):
    if c <= 0:
        raise SquareRootError("{} has no positive rational square root.".format(c))
    p, q = isqrt(c.numerator), isqrt(c.denominator)
    if p*p != c.numerator or q*q != c.denominator:
        raise SquareRootError("{} is not the square of a rational.".format(c))
    return Fraction(p, q)

def _rational_convolve(a, b, order):
    """Cauchy product of two rational coefficient lists, carried out on
    integer numerators over a common denominator.
    """
    da = lcm(*(c.denominator for c in a[:order]))
    db = lcm(*(c.denominator for c in b[:order]))
    ia = [c.numerator*(da//c.denominator) for c in a[:order]]
    ib = [(j, c.numerator*(db//c.denominator))
          for j, c in enumerate(b[:order]) if c != 0]
    out = [0]*order
    for i, x in enumerate(ia):
        if x == 0:
            continue
        limit = order - i
        for j, y in ib:
            if j >= limit:
                break
            out[i + j] += x*y
    den = da*db
    return [Fraction(v, den) for v in out]

def _convolve(a, b, order, zero):
    out = [zero]*order
    for i in range(order):
        if a[i] == 0:
            continue
        for j in range(order - i):
            if b[j] != 0:
                out[i + j] = out[i + j] + a[i]*b[j]
    return out

def one(order, var="q"):
    """Returns the constant series 1 truncated at `order`."""
    return QSeries([1], order, var)

def monomial(coefficient, exponent, order, var="q"):
    """Returns `coefficient*x^exponent` truncated at `order`."""
    coeffs = [0]*order
    if exponent < order:
        coeffs[exponent] = coefficient
    return QSeries(coeffs, order, var)

def first_difference(a, b):
    """Returns the first index where the series `a` and `b` differ below their
    common order, or `None`.
    """
    return a.first_difference(b)

def euler_product(order):
    """Returns prod_{r>=1} (1 - q^r) truncated at `order`, summed as the
    sparse series of signed pentagonal-number exponents.
    """
    coeffs = [0]*order
    if order > 0:
        coeffs[0] = 1
    k = 1
    while k*(3*k - 1)//2 < order:
        sign = -1 if k % 2 else 1
        for e in (k*(3*k - 1)//2, k*(3*k + 1)//2):
            if e < order:
                coeffs[e] += sign
        k += 1
    return QSeries(coeffs, order)

def euler_product_naive(order):
    """Returns prod_{r>=1} (1 - q^r) truncated at `order` by multiplying the
    factors one at a time.
    """
    result = one(order)
    for r in range(1, order):
        result = result - result.shift_up(r).truncate(order)
    return result

def eta24(order):
    """Returns q * prod_{r>=1} (1 - q^r)^24 truncated at `order`."""
    if order == 0:
        return QSeries([], 0)
    return (euler_product(order - 1)**24).shift_up(1)
