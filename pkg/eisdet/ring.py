"""The graded ring of level-one modular forms as polynomials in X = E4
(weight 4) and Y = E6 (weight 6).

Every E_{2n} is reduced into this ring with Ramanujan's recursion for the
normalized series S_{2n}, and any q-expansion of known weight can be written
back on the monomial basis X^a Y^b (4a + 6b = weight) by an exact linear
solve.
"""
from fractions import Fraction
from math import comb, gcd, lcm
import threading

from sympy import Matrix, Rational

from eisdet.arith import bernoulli, eisenstein_scale
from eisdet.exceptions import (WeightError, NotInSpanError,
                               InsufficientOrderError, LogicError)
from eisdet.series import QSeries
from eisdet.utility import to_fraction

class MFPoly(object):
    """Polynomial in X = E4 and Y = E6 with rational coefficients.

    Args:
        terms (dict): keys are `(a, b)` exponent pairs of X^a Y^b; values
          are rational coefficients. Zero coefficients are dropped.
    """
    __hash__ = None

    def __init__(self, terms=None):
        self.terms = {}
        for (a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise ValueError("Negative exponent in X^{} Y^{}.".format(a, b))
            c = to_fraction(c)
            if c != 0:
                self.terms[(int(a), int(b))] = c

    @staticmethod
    def X():
        return MFPoly({(1, 0): 1})

    @staticmethod
    def Y():
        return MFPoly({(0, 1): 1})

    @staticmethod
    def constant(c):
        return MFPoly({(0, 0): c})

    def items(self):
        """Returns `((a, b), c)` pairs by descending power of X."""
        return sorted(self.terms.items(), key=lambda t: (-t[0][0], -t[0][1]))

    def weights(self):
        return set(4*a + 6*b for a, b in self.terms)

    @property
    def weight(self):
        """int: weight of a homogeneous, nonzero polynomial; `None`
        otherwise.
        """
        w = self.weights()
        return w.pop() if len(w) == 1 else None

    def is_homogeneous(self):
        return len(self.weights()) <= 1

    def is_zero(self):
        return len(self.terms) == 0

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for (a, b), c in self.items():
            factors = []
            if a:
                factors.append("X" if a == 1 else "X^{}".format(a))
            if b:
                factors.append("Y" if b == 1 else "Y^{}".format(b))
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append("{}*{}".format(c, mono))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return "MFPoly({})".format(self)

    def _coerce(self, other):
        if isinstance(other, MFPoly):
            return other
        return MFPoly.constant(other)

    def __eq__(self, other):
        if not isinstance(other, MFPoly):
            try:
                other = MFPoly.constant(other)
            except ValueError:
                return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return MFPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return MFPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MFPoly):
            c = to_fraction(other)
            return MFPoly({k: v*c for k, v in self.terms.items()})
        terms = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                terms[key] = terms.get(key, 0) + c1*c2
        return MFPoly(terms)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self*(Fraction(1)/to_fraction(scalar))

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("Polynomial powers must be non-negative integers.")
        result = MFPoly.constant(1)
        for i in range(e):
            result = result*self
        return result

    def divide_x(self):
        """Returns the exact quotient by X.

        Raises:
            LogicError: if some monomial has no factor X.
        """
        if any(a == 0 for a, b in self.terms):
            raise LogicError("{} is not divisible by E4.".format(self))
        return MFPoly({(a - 1, b): c for (a, b), c in self.terms.items()})

    def xy_terms(self):
        """Rewrites the polynomial in x = X^3 and y = Y^2.

        Returns:
            dict: keys are `(i, j)` for x^i y^j.

        Raises:
            WeightError: if some monomial is not a product of X^3 and Y^2.
        """
        result = {}
        for (a, b), c in self.terms.items():
            if a % 3 or b % 2:
                raise WeightError("X^{} Y^{} is not a monomial in X^3 and "
                                  "Y^2.".format(a, b))
            result[(a//3, b//2)] = c
        return result

    def degree_xy(self):
        """Returns the total degree in x = X^3 and y = Y^2, or `None` for the
        zero polynomial.
        """
        terms = self.xy_terms()
        if not terms:
            return None
        return max(i + j for i, j in terms)

    def primitive(self):
        """Splits the polynomial as `content * primitive` where the primitive
        part has coprime integer coefficients and a positive coefficient on
        its highest power of X.

        Returns:
            tuple: `(content, primitive)`.
        """
        if self.is_zero():
            return Fraction(0), MFPoly()
        values = [c for _, c in self.items()]
        den = lcm(*(c.denominator for c in values))
        num = 0
        for c in values:
            num = gcd(num, c.numerator*(den//c.denominator))
        content = Fraction(num, den)
        if values[0] < 0:
            content = -content
        return content, self/content

def delta_poly():
    """Returns Delta = (X^3 - Y^2)/1728."""
    return (MFPoly.X()**3 - MFPoly.Y()**2)/1728

def serre_derivative(p):
    """Applies the Serre derivative D - (k/12) E2 to every weight-k part of
    `p`. On the generators it acts as E4 -> -E6/3 and E6 -> -E4^2/2, and
    it extends to the whole ring as a derivation.
    """
    result = {}
    for (a, b), c in p.terms.items():
        if a:
            key = (a - 1, b + 1)
            result[key] = result.get(key, 0) - c*Fraction(a, 3)
        if b:
            key = (a + 2, b - 1)
            result[key] = result.get(key, 0) - c*Fraction(b, 2)
    return MFPoly(result)

def leading_coefficients(p):
    """Returns the q^0 and q^1 coefficients of `p` without expanding any
    series. E4 and E6 both start with 1, and their q coefficients are 240
    and -504.
    """
    x1, y1 = eisenstein_scale(4), eisenstein_scale(6)
    constant = sum(p.terms.values(), Fraction(0))
    linear = sum((c*(a*x1 + b*y1) for (a, b), c in p.terms.items()),
                 Fraction(0))
    return constant, linear

_one_dimensional = {
    0: {(0, 0): 1},
    4: {(1, 0): 1},
    6: {(0, 1): 1},
    8: {(2, 0): 1},
    10: {(1, 1): 1},
    14: {(2, 1): 1}
}
"""dict: the monomial spanning each one-dimensional weight; it equals the
Eisenstein series of that weight (or 1).
"""

def eisenstein_factor(weight):
    """Returns the basis element 1, E4, E6, E8, E10 or E14 of a
    one-dimensional weight.

    Raises:
        WeightError: for weights whose space is not one-dimensional.
    """
    if weight not in _one_dimensional:
        raise WeightError("Weight {} is not one-dimensional.".format(weight))
    return MFPoly(_one_dimensional[weight])

_reduced = {4: MFPoly.X(), 6: MFPoly.Y()}
"""dict: keys are weights 2n; values are E_{2n} as :class:`MFPoly`."""
_reduced_lock = threading.Lock()

def _normalizer(k):
    """Returns the factor with S_k = factor * E_k."""
    return Fraction((-1)**(k//2 - 1))*bernoulli(k)/(2*k)

def _next_reduction(n):
    """Returns E_{n+2} from the S_j with j <= n (n even, n > 4)."""
    S = lambda k: _reduced[k]*_normalizer(k)
    rhs = S(4)*S(n - 2)*(-20*comb(n - 2, 2))
    top = (n - 2)//4
    for r in range(1, top + 1):
        weight = ((n + 3 - 5*r)*(n - 8 - 5*r) - 5*(r - 2)*(r + 3))
        term = S(2*r + 2)*S(n - 2*r)*(comb(n - 2, 2*r)*weight)
        if 4*r == n - 2:
            term = term/2
        rhs = rhs + term
    lhs = Fraction(-(n + 2)*(n + 3), 2*n*(n - 1))
    return rhs/lhs/_normalizer(n + 2)

def ramanujan_reduce(two_n):
    """Returns E_{two_n} as a homogeneous polynomial in E4 and E6.

    Raises:
        WeightError: for odd weights or weights below 4.
    """
    if not isinstance(two_n, int) or two_n % 2 == 1 or two_n < 4:
        raise WeightError("Eisenstein series need an even weight >= 4; got "
                          "{}.".format(two_n))
    with _reduced_lock:
        for k in range(8, two_n + 1, 2):
            if k not in _reduced:
                _reduced[k] = _next_reduction(k - 2)
        return _reduced[two_n]

_powers = {}
"""dict: keys are `("X"|"Y", exponent)`; values are the longest computed
expansion of E4^exponent or E6^exponent.
"""
_powers_lock = threading.Lock()

def _generator_power(name, e, order):
    from eisdet.modforms import eisenstein
    key = (name, e)
    with _powers_lock:
        hit = _powers.get(key)
        if hit is not None and hit.order >= order:
            return hit.truncate(order)
    base = eisenstein(4 if name == "X" else 6, order).series
    result = base**e
    with _powers_lock:
        _powers[key] = result
    return result

def monomial_series(a, b, order):
    """Returns the q-expansion of E4^a E6^b at `order`."""
    return _generator_power("X", a, order)*_generator_power("Y", b, order)

def evaluate(p, order, weight=None):
    """Substitutes the q-expansions of E4 and E6 into `p`.

    Args:
        p (MFPoly): homogeneous polynomial.
        order (int): truncation order.
        weight (int): weight reported for the zero polynomial.

    Returns:
        eisdet.modforms.WeightedSeries: the expansion with the weight of `p`.

    Raises:
        WeightError: if `p` is not homogeneous.
    """
    from eisdet.modforms import WeightedSeries
    if not p.is_homogeneous():
        raise WeightError("Cannot give {} a weight; it is not "
                          "homogeneous.".format(p))
    total = QSeries([], order)
    for (a, b), c in p.items():
        total = total + monomial_series(a, b, order)*c
    return WeightedSeries(total, p.weight if p.weight is not None else (weight or 0))

def basis_monomials(weight):
    """Returns all `(a, b)` with 4a + 6b = `weight`, by descending a."""
    if weight < 0 or weight % 2:
        return []
    return [(a, (weight - 4*a)//6) for a in range(weight//4, -1, -1)
            if (weight - 4*a) % 6 == 0]

def series_to_poly(s, weight, guard=8):
    """Writes the q-expansion `s` of a weight-`weight` modular form on the
    monomial basis. The first `len(basis)` coefficients determine the
    solution; all remaining known coefficients are then checked.

    Args:
        s (eisdet.series.QSeries): series in q.
        weight (int): weight of the form.
        guard (int): coefficients required beyond the square system.

    Raises:
        InsufficientOrderError: if `s.order < len(basis) + guard`.
        NotInSpanError: with the first q-power where the fit disagrees.
    """
    basis = basis_monomials(weight)
    d = len(basis)
    minimum = d + guard
    if s.order < minimum:
        raise InsufficientOrderError("Reducing a weight {} form needs order "
                                     ">= {}; got {}.".format(weight, minimum,
                                                             s.order),
                                     minimum=minimum)
    if d == 0:
        if s.is_zero():
            return MFPoly()
        raise NotInSpanError("There are no nonzero forms of weight "
                             "{}.".format(weight), index=s.valuation())

    columns = [monomial_series(a, b, s.order) for a, b in basis]
    A = Matrix(d, d, lambda i, j: Rational(columns[j][i].numerator,
                                           columns[j][i].denominator))
    rhs = Matrix(d, 1, lambda i, j: Rational(s[i].numerator, s[i].denominator))
    solution = A.LUsolve(rhs)
    poly = MFPoly({basis[j]: Fraction(int(solution[j].p), int(solution[j].q))
                   for j in range(d)})

    index = evaluate(poly, s.order).series.first_difference(s)
    if index is not None:
        raise NotInSpanError("The series is not a weight {} form; it first "
                             "disagrees at q^{}.".format(weight, index),
                             index=index)
    return poly
