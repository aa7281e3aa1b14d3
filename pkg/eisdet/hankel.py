"""Hankel matrices and minors of Eisenstein series, their exact determinants
and the constant-weight classification of subscript matrices.

The infinite Hankel array has entry E_{2(i+j)} in row i and column j
(i, j >= 1). A :class:`MinorSpec` selects a square minor of it by strictly
increasing row and column indices.
"""
from fractions import Fraction
from itertools import combinations, permutations

import numpy as np

from eisdet.exceptions import ZeroDeterminantError, RepeatedIndexError
from eisdet.utility import to_fraction

class MinorSpec(object):
    """Row and column indices of a square minor of the Hankel array.

    Args:
        rows (list): strictly increasing positive integers.
        cols (list): strictly increasing positive integers, as many as
          `rows`.

    Raises:
        ValueError: for empty, unequal, non-positive or non-increasing
          index lists.
    """
    def __init__(self, rows, cols):
        self.rows = [int(i) for i in rows]
        self.cols = [int(j) for j in cols]
        if not self.rows or len(self.rows) != len(self.cols):
            raise ValueError("A minor needs equally many rows and columns; got "
                             "{} and {}.".format(self.rows, self.cols))
        for name, idx in (("rows", self.rows), ("cols", self.cols)):
            if idx[0] < 1 or any(b <= a for a, b in zip(idx, idx[1:])):
                raise ValueError("Minor {} must be strictly increasing positive "
                                 "integers; got {}.".format(name, idx))

    def __eq__(self, other):
        if not isinstance(other, MinorSpec):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols

    def __hash__(self):
        return hash((tuple(self.rows), tuple(self.cols)))

    def __repr__(self):
        return "MinorSpec(rows={}, cols={})".format(self.rows, self.cols)

    @property
    def n(self):
        return len(self.rows)

    @property
    def label(self):
        """str: the `minor:` form accepted by :func:`parse_spec`."""
        return "minor:{}/{}".format(",".join(map(str, self.rows)),
                                    ",".join(map(str, self.cols)))

    @property
    def weight(self):
        """int: weight 2(sum(rows) + sum(cols)) of the determinant."""
        return 2*(sum(self.rows) + sum(self.cols))

    @property
    def quotient_weight(self):
        """int: weight left after dividing the determinant by Delta^(n-1)."""
        return self.weight - 12*(self.n - 1)

    def subscripts(self):
        """Returns the integer matrix of Eisenstein weights 2(i+j)."""
        return np.array([[2*(i + j) for j in self.cols] for i in self.rows],
                        dtype=int)

class ZeroPattern(object):
    """Rule replacing some Eisenstein entries by zero according to
    congruences on their weight.

    Args:
        mode (str): "unless" keeps an entry only when its weight is divisible
          by one of the moduli; "whenever" zeroes an entry as soon as its
          weight is divisible by one of them.
        moduli (list): positive integers.
    """
    def __init__(self, mode, moduli):
        if mode not in ("unless", "whenever"):
            raise ValueError("Zero pattern mode must be 'unless' or 'whenever'.")
        self.mode = mode
        self.moduli = [int(m) for m in moduli]
        if not self.moduli or any(m < 1 for m in self.moduli):
            raise ValueError("Zero pattern moduli must be positive integers.")

    def __repr__(self):
        return "ZeroPattern({}:{})".format(self.mode,
                                           ",".join(map(str, self.moduli)))

    def keeps(self, weight):
        """Returns True if the entry E_`weight` survives the pattern."""
        hit = any(weight % m == 0 for m in self.moduli)
        return hit if self.mode == "unless" else not hit

def minor_spec(rows, cols):
    """Returns a validated :class:`MinorSpec`."""
    return MinorSpec(rows, cols)

def hankel_spec(n):
    """Returns the n x n Hankel determinant H_n, rows = cols = 1..n."""
    return MinorSpec(range(1, n + 1), range(1, n + 1))

def chi_spec(n, m):
    """Returns the minor of H_{n+1} without its last row and its (n-m+1)-st
    column. `m = 0` is H_n itself.

    Raises:
        ZeroDeterminantError: for n < m, where the determinant is zero by
          definition.
    """
    if m == 0:
        return hankel_spec(n)
    if n < m:
        raise ZeroDeterminantError("chi_{}^({}) is identically zero since "
                                   "{} < {}.".format(n, m, n, m))
    if m < 0:
        raise ValueError("chi determinants need m >= 0.")
    return MinorSpec(range(1, n + 1),
                     [j for j in range(1, n + 2) if j != n - m + 1])

def _int_list(text):
    return [int(v) for v in text.split(",") if v.strip()]

def parse_spec(text):
    """Parses the command-line forms `hankel:N`, `chi:N,M` and
    `minor:1,3/1,3`.

    Raises:
        ValueError: for malformed text.
    """
    kind, _, body = text.partition(":")
    try:
        if kind == "hankel":
            return hankel_spec(int(body))
        if kind == "chi":
            n, m = _int_list(body)
            return chi_spec(n, m)
        if kind == "minor":
            rows, cols = body.split("/")
            return minor_spec(_int_list(rows), _int_list(cols))
    except (TypeError, ValueError) as e:
        raise ValueError("Cannot parse minor '{}': {}".format(text, e))
    raise ValueError("Unknown minor '{}'; use hankel:N, chi:N,M or "
                     "minor:ROWS/COLS.".format(text))

def parse_pattern(text):
    """Parses `unless:6` or `whenever:4,6` into a :class:`ZeroPattern`."""
    mode, _, body = text.partition(":")
    try:
        return ZeroPattern(mode, _int_list(body))
    except ValueError as e:
        raise ValueError("Cannot parse zero pattern '{}': {}".format(text, e))

def _entries(spec, pattern, factory, empty):
    n = spec.n
    result = np.empty((n, n), dtype=object)
    for r, i in enumerate(spec.rows):
        for s, j in enumerate(spec.cols):
            weight = 2*(i + j)
            if pattern is not None and not pattern.keeps(weight):
                result[r, s] = empty
            else:
                result[r, s] = factory(weight)
    return result

def build(spec, order, zero=None):
    """Returns the matrix of q-expansions E_{2(i+j)} selected by `spec`.

    Args:
        spec (MinorSpec): the minor.
        order (int): truncation order of every entry.
        zero (ZeroPattern): optional pattern of entries replaced by 0.

    Returns:
        numpy.ndarray: object array of :class:`~eisdet.series.QSeries`.
    """
    from eisdet.modforms import eisenstein
    from eisdet.series import QSeries
    return _entries(spec, zero, lambda w: eisenstein(w, order).series,
                    QSeries([], order))

def symbolic_build(spec, zero=None):
    """Returns the matrix of :class:`~eisdet.ring.MFPoly` entries obtained by
    reducing every E_{2(i+j)} to a polynomial in E4 and E6.
    """
    from eisdet.ring import ramanujan_reduce, MFPoly
    return _entries(spec, zero, ramanujan_reduce, MFPoly())

def minor_det(matrix, zero):
    """Division-free determinant over any commutative ring.

    The expansion runs over column subsets: after processing the first k rows,
    `partial[S]` holds the signed sum over all bijections from those rows onto
    the column set S.

    Args:
        matrix: square 2D array (or nested list) of ring elements.
        zero: zero element of the ring.
    """
    n = len(matrix)
    partial = {0: None}
    for r in range(n):
        row = matrix[r]
        updated = {}
        for mask, value in partial.items():
            for c in range(n):
                bit = 1 << c
                if mask & bit:
                    continue
                entry = row[c]
                term = entry if value is None else value*entry
                #sign: number of chosen columns to the right of c
                if bin(mask >> (c + 1)).count("1") % 2:
                    term = -term
                key = mask | bit
                updated[key] = term if key not in updated else updated[key] + term
        partial = updated
    if n == 0:
        return zero + 1
    return partial.get((1 << n) - 1, zero)

def leibniz_det(matrix, zero):
    """Determinant as the signed sum over all permutations."""
    n = len(matrix)
    total = zero
    for perm in permutations(range(n)):
        term = None
        for r in range(n):
            term = matrix[r][perm[r]] if term is None else term*matrix[r][perm[r]]
        if _permutation_sign(perm) < 0:
            term = -term
        total = total + term
    return total

def _permutation_sign(perm):
    sign = 1
    for a, b in combinations(range(len(perm)), 2):
        if perm[a] > perm[b]:
            sign = -sign
    return sign

def _object_matrix(matrix):
    """Copies a nested list into a 2D object array without letting numpy
    descend into the (indexable) series entries.
    """
    if isinstance(matrix, np.ndarray) and matrix.ndim == 2:
        return matrix
    rows = list(matrix)
    width = len(rows[0]) if rows else 0
    if any(len(row) != width for row in rows):
        raise ValueError("Matrix rows have different lengths.")
    result = np.empty((len(rows), width), dtype=object)
    for r, row in enumerate(rows):
        for s, entry in enumerate(row):
            result[r, s] = entry
    return result

def det(matrix):
    """Exact determinant of a square matrix of q-series.

    Raises:
        ValueError: for non-square input or entries with different variables
          or truncation orders.
    """
    from eisdet.series import QSeries
    matrix = _object_matrix(matrix)
    if matrix.shape[0] != matrix.shape[1] or matrix.size == 0:
        raise ValueError("Determinants need a non-empty square matrix; got "
                         "shape {}.".format(matrix.shape))
    first = matrix[0, 0]
    for entry in matrix.flat:
        if not isinstance(entry, QSeries):
            raise ValueError("Every entry must be a QSeries.")
        if entry.var != first.var or entry.order != first.order:
            raise ValueError("All entries must share one variable and order.")
    return minor_det(matrix, QSeries([], first.order, first.var))

class ConstantWeightReport(object):
    """Result of classifying a matrix of Eisenstein subscripts.

    Attributes:
        constant_weight (bool): every term of the Leibniz expansion has the
          same weight.
        weight: the common weight when `constant_weight` is True.
        hankel (bool): the matrix is, up to a row and column permutation
          with sign `sign`, the subscript matrix of the minor `rows/cols`.
        rows (list): recovered row indices (`None` unless `hankel`).
        cols (list): recovered column indices (`None` unless `hankel`).
        sign (int): sign of the normalizing permutation (`None` unless
          `hankel`).
    """
    def __init__(self, constant_weight, weight=None, hankel=False, rows=None,
                 cols=None, sign=None):
        self.constant_weight = constant_weight
        self.weight = weight
        self.hankel = hankel
        self.rows = rows
        self.cols = cols
        self.sign = sign

    def to_dict(self):
        from eisdet.utility import rational_str
        return {
            "constant_weight": self.constant_weight,
            "weight": None if self.weight is None else rational_str(self.weight),
            "hankel": self.hankel,
            "rows": self.rows,
            "cols": self.cols,
            "sign": self.sign
        }

def _as_rational_matrix(subscripts):
    values = [[to_fraction(v) for v in row] for row in np.asarray(subscripts,
                                                                   dtype=object)]
    n = len(values)
    if n == 0 or any(len(row) != n for row in values):
        raise ValueError("Subscript matrix must be square and non-empty.")
    return values

def permutation_weights(subscripts):
    """Returns the set of weights sum_r p[r][sigma(r)] over all
    permutations sigma.
    """
    p = _as_rational_matrix(subscripts)
    n = len(p)
    return set(sum(p[r][perm[r]] for r in range(n))
               for perm in permutations(range(n)))

def classify(subscripts):
    """Decides whether every Leibniz term of a determinant of Eisenstein
    series with the given subscripts has the same weight and, for even
    subscripts greater than 2, recovers the Hankel minor it comes from.

    Args:
        subscripts: square matrix of rationals; entry (r, s) is the weight
          of the Eisenstein series in that position.

    Raises:
        RepeatedIndexError: if two rows or two columns are equal.
    """
    p = _as_rational_matrix(subscripts)
    n = len(p)
    if len(set(tuple(row) for row in p)) < n:
        raise RepeatedIndexError("The subscript matrix has repeated rows.")
    if len(set(tuple(p[r][s] for r in range(n)) for s in range(n))) < n:
        raise RepeatedIndexError("The subscript matrix has repeated columns.")

    constant = all(p[i-1][j-1] + p[i][j] == p[i][j-1] + p[i-1][j]
                   for i in range(1, n) for j in range(1, n))
    if not constant:
        return ConstantWeightReport(False)
    weight = sum(p[r][r] for r in range(n))

    even = all(v.denominator == 1 and v.numerator % 2 == 0 and v > 2
               for row in p for v in row)
    if not even:
        return ConstantWeightReport(True, weight)

    colperm = sorted(range(n), key=lambda s: p[0][s])
    p = [[row[s] for s in colperm] for row in p]
    rowperm = sorted(range(n), key=lambda r: p[r][0])
    p = [p[r] for r in rowperm]
    sign = _permutation_sign(colperm)*_permutation_sign(rowperm)

    cols = [int(v/2) - 1 for v in p[0]]
    rows = [int((p[r][0] - p[0][0])/2) + 1 for r in range(n)]
    return ConstantWeightReport(True, weight, True, rows, cols, sign)
