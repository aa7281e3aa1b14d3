"""Verification of the cataloged determinant identities
E_e Delta^m = constant * det(minor) and discovery of the evaluations of the
Hankel determinants H_n.

Identities are checked in two independent ways:

- *series*: both sides are expanded as q-series and compared exactly. Two
  modular forms of weight w agree once their first floor(w/12) + 1
  coefficients do, so :func:`minimum_order` asks for that many plus a guard.
- *symbolic*: every entry is reduced to a polynomial in E4 and E6 with
  :func:`eisdet.ring.ramanujan_reduce` and the determinant is expanded in
  that ring; the other side uses Delta = (E4^3 - E6^2)/1728. For the
  formula Delta = (E4^3 - E6^2)/1728 itself, the right side is shown to be
  annihilated by the Serre derivative (so its logarithmic derivative is E2,
  as for the eta product) with q-expansion starting 0 + q.
"""
from itertools import combinations
import threading

from tqdm import tqdm

from eisdet.exceptions import (UnknownIdentityError, InsufficientOrderError,
                               LogicError, ValuationError, NotInSpanError,
                               WeightError)
from eisdet.hankel import (parse_spec, build, det, symbolic_build, minor_det,
                           hankel_spec, minor_spec)
from eisdet.logs import get_logger
from eisdet.modforms import eisenstein, delta, delta_unit
from eisdet.reports import Check, VerificationReport
from eisdet.ring import (MFPoly, ramanujan_reduce, delta_poly, evaluate,
                         series_to_poly, basis_monomials, serre_derivative,
                         leading_coefficients)
from eisdet.utility import templates_dir, from_factors, rational_str

class IdentityRecord(object):
    """One cataloged identity E_e * Delta^m = constant * det(spec).

    Args:
        id (str): label such as "2.19".
        spec (eisdet.hankel.MinorSpec): the minor; `None` for the formula
          identity "1.5".
        eisenstein (int): weight e of the Eisenstein factor, 0 for none.
        delta (int): power m of the discriminant.
        constant (fractions.Fraction): the constant, exactly as printed.
        description (str): short statement of the identity.
        kind (str): "determinant" or "formula".
    """
    def __init__(self, id, spec, eisenstein, delta, constant, description="",
                 kind="determinant"):
        self.id = id
        self.spec = spec
        self.eisenstein = eisenstein
        self.delta = delta
        self.constant = constant
        self.description = description
        self.kind = kind

    @property
    def weight(self):
        """int: weight 12m + e of both sides."""
        return 12*self.delta + self.eisenstein

    def lhs_label(self):
        parts = []
        if self.eisenstein:
            parts.append("E{}".format(self.eisenstein))
        parts.append("Delta" if self.delta == 1 else "Delta^{}".format(self.delta))
        return "*".join(parts)

    def to_dict(self):
        return {
            "id": self.id,
            "kind": self.kind,
            "spec": None if self.spec is None else self.spec.label,
            "eisenstein": self.eisenstein,
            "delta": self.delta,
            "constant": rational_str(self.constant),
            "description": self.description
        }

_catalog = None
_catalog_lock = threading.Lock()

def _load_catalog():
    from eisdet.io import read
    data = read(templates_dir(), "catalog")
    records = []
    for entry in data["identities"]:
        spec = parse_spec(entry["spec"]) if "spec" in entry else None
        record = IdentityRecord(str(entry["id"]), spec, int(entry["eisenstein"]),
                                int(entry["delta"]),
                                from_factors(entry["constant"]),
                                entry.get("description", ""),
                                entry.get("kind", "determinant"))
        if spec is not None and spec.weight != record.weight:
            raise LogicError("Catalog entry {} has a minor of weight {} for a "
                             "left side of weight {}.".format(record.id,
                                                              spec.weight,
                                                              record.weight))
        if not record.description:
            record.description = "{} = ({})*det {}".format(
                record.lhs_label(), record.constant, spec.label)
        records.append(record)
    return records

def catalog():
    """Returns the cataloged identities in catalog order."""
    global _catalog
    with _catalog_lock:
        if _catalog is None:
            _catalog = _load_catalog()
        return list(_catalog)

def lookup(id):
    """Returns the :class:`IdentityRecord` labeled `id`.

    Raises:
        UnknownIdentityError: if there is no such label.
    """
    for record in catalog():
        if record.id == id:
            return record
    raise UnknownIdentityError("Unknown identity '{}'. Known labels: {}.".format(
        id, ", ".join(r.id for r in catalog())))

def minimum_order(record, guard=8):
    """Returns the smallest truncation order at which a series comparison of
    `record` is conclusive: floor(w/12) + 1 coefficients plus `guard`.
    """
    return record.weight//12 + 1 + guard

def _lhs_series(record, order):
    result = delta(order).series**record.delta
    if record.eisenstein:
        result = result*eisenstein(record.eisenstein, order).series
    return result

def _lhs_poly(record):
    result = delta_poly()**record.delta
    if record.eisenstein:
        result = result*ramanujan_reduce(record.eisenstein)
    return result

def _series_check(record, order):
    if record.kind == "formula":
        lhs = delta(order, "product").series
        E4, E6 = eisenstein(4, order).series, eisenstein(6, order).series
        rhs = (E4**3 - E6**2)*record.constant
        detail = "eta product against E4, E6 expansions"
    else:
        lhs = _lhs_series(record, order)
        rhs = det(build(record.spec, order))*record.constant
        detail = "{} against {}".format(record.lhs_label(), record.spec.label)
    index = lhs.first_difference(rhs)
    return Check("series", index is None, order=order, first_discrepancy=index,
                 detail=detail)

def _symbolic_check(record):
    if record.kind == "formula":
        F = (MFPoly.X()**3 - MFPoly.Y()**2)*record.constant
        theta = serre_derivative(F)
        constant, linear = leading_coefficients(F)
        passed = (theta.is_zero() and F.weight == 12 and constant == 0
                  and linear == 1)
        detail = ("Serre derivative of {} is {}; q^0, q^1 coefficients {}, "
                  "{}".format(F, theta, rational_str(constant),
                              rational_str(linear)))
    else:
        D = minor_det(symbolic_build(record.spec), MFPoly())
        difference = _lhs_poly(record) - D*record.constant
        passed = difference.is_zero()
        detail = "determinant expanded in E4, E6"
        if not passed:
            detail += "; difference {}".format(difference)
    return Check("symbolic", passed, weight=record.weight, detail=detail)

def verify(id, order=64, mode="series", guard=8):
    """Verifies a cataloged identity.

    Args:
        id (str): catalog label.
        order (int): truncation order for the series comparison.
        mode (str): "series", "symbolic" or "both".
        guard (int): extra coefficients beyond the conclusive minimum.

    Returns:
        eisdet.reports.VerificationReport: one check per mode.

    Raises:
        UnknownIdentityError: for labels outside the catalog.
        InsufficientOrderError: when `order` is below :func:`minimum_order`.
    """
    record = lookup(id)
    modes = ["series", "symbolic"] if mode == "both" else [mode]
    checks = []
    for m in modes:
        if m == "series":
            minimum = minimum_order(record, guard)
            if order < minimum:
                raise InsufficientOrderError("Identity {} needs order >= {} "
                                             "(weight {}, guard {}); got "
                                             "{}.".format(id, minimum,
                                                          record.weight,
                                                          guard, order),
                                             minimum=minimum)
            checks.append(_series_check(record, order))
        elif m == "symbolic":
            checks.append(_symbolic_check(record))
        else:
            raise ValueError("Unknown verification mode '{}'.".format(m))

    report = VerificationReport(record.id, record.description, record.constant,
                                checks)
    get_logger("identities").info("verify %s (%s): %s", id, mode,
                                  "pass" if report.passed else "FAIL")
    return report

def degree_schedule(n):
    """Returns the predicted shape of the evaluation of H_n.

    Returns:
        tuple: `(family, r, degree, e4_factor)`; `family` is "2.35" for
        n = 3r+1, "2.36" for n = 3r+2 and "2.37" for n = 3r+3, `degree` is
        the total degree of the polynomial in x = E4^3 and y = E6^2.
    """
    if n < 1:
        raise ValueError("Hankel determinants start at n = 1.")
    r, k = divmod(n - 1, 3)
    if k == 0:
        return ("2.35", r, 3*r*(r - 1)//2, True)
    elif k == 1:
        return ("2.36", r, r*(3*r - 1)//2, False)
    return ("2.37", r, r*(3*r + 1)//2, False)

class DiscoveryResult(object):
    """Evaluation det H_n = constant * Delta^(n-1) * (E4 if e4_factor) *
    poly(E4^3, E6^2).

    Attributes:
        n (int): matrix size.
        det_weight (int): 2n(n+1).
        quotient_weight (int): 2(n-2)(n-3), weight left after Delta^(n-1).
        e4_factor (bool): whether E4 divides the quotient.
        poly (eisdet.ring.MFPoly): primitive polynomial in X^3 and Y^2.
        constant (fractions.Fraction): the factor in front.
        order (int): truncation order of the determinant.
        verified (bool): the reconstruction matched the determinant.
    """
    def __init__(self, n, e4_factor, poly, constant, order, verified):
        self.n = n
        self.det_weight = 2*n*(n + 1)
        self.quotient_weight = 2*(n - 2)*(n - 3)
        self.e4_factor = e4_factor
        self.poly = poly
        self.constant = constant
        self.order = order
        self.verified = verified

    @property
    def degree(self):
        """int: total degree of :attr:`poly` in x = E4^3 and y = E6^2."""
        return self.poly.degree_xy()

    @property
    def identity_constant(self):
        """fractions.Fraction: c with Delta^(n-1) * ... = c * det H_n."""
        return 1/self.constant

    @property
    def missing_monomials(self):
        """list: `(i, j)` of the x^i y^j of top degree whose coefficient
        vanishes.
        """
        terms = self.poly.xy_terms()
        D = self.degree
        return [(i, D - i) for i in range(D, -1, -1) if (i, D - i) not in terms]

    @property
    def full_support(self):
        return len(self.missing_monomials) == 0

    def xy_string(self):
        """Returns :attr:`poly` written in x = E4^3 and y = E6^2."""
        parts = []
        for (i, j), c in sorted(self.poly.xy_terms().items(), reverse=True):
            factors = []
            if i:
                factors.append("x" if i == 1 else "x^{}".format(i))
            if j:
                factors.append("y" if j == 1 else "y^{}".format(j))
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append("{}*{}".format(c, mono))
        return " + ".join(parts).replace("+ -", "- ")

    def to_dict(self):
        from eisdet.io import poly_to_dict
        family, r, degree, e4 = degree_schedule(self.n)
        return {
            "n": self.n,
            "det_weight": self.det_weight,
            "quotient_weight": self.quotient_weight,
            "e4_factor": self.e4_factor,
            "constant": rational_str(self.constant),
            "identity_constant": rational_str(self.identity_constant),
            "poly": poly_to_dict(self.poly),
            "poly_xy": self.xy_string(),
            "degree": self.degree,
            "full_support": self.full_support,
            "missing_monomials": [list(m) for m in self.missing_monomials],
            "schedule": {"family": family, "r": r, "degree": degree,
                         "e4_factor": e4},
            "order": self.order,
            "verified": self.verified
        }

def discovery_order(n, guard=8):
    """Returns the smallest truncation order :func:`discover` accepts for
    H_n: n - 1 coefficients are spent dividing by Delta^(n-1), then the
    basis size plus `guard` are needed for the reduction.
    """
    return n - 1 + len(basis_monomials(2*(n - 2)*(n - 3))) + guard

def _divide_by_delta(D, power):
    """Returns D/Delta^power for a series vanishing to order `power`."""
    quotient = D.shift_down(power)
    if power > 0:
        quotient = quotient*(delta_unit(quotient.order).invert()**power)
    return quotient

def discover(n, order=None, guard=8):
    """Finds the evaluation of the Hankel determinant H_n as
    constant * Delta^(n-1) * (E4) * P(E4^3, E6^2) with P primitive.

    Args:
        n (int): matrix size.
        order (int): truncation order; defaults to :func:`discovery_order`.
        guard (int): extra coefficients checked by the reduction.

    Raises:
        InsufficientOrderError: when `order` is below :func:`discovery_order`.
        LogicError: if the determinant does not vanish to order n-1, is not a
          modular form of the expected weight or fails reconstruction.
    """
    log = get_logger("identities")
    minimum = discovery_order(n, guard)
    if order is None:
        order = minimum
    elif order < minimum:
        raise InsufficientOrderError("Discovery for n = {} needs order >= {}; "
                                     "got {}.".format(n, minimum, order),
                                     minimum=minimum)

    D = det(build(hankel_spec(n), order))
    W = 2*(n - 2)*(n - 3)
    try:
        quotient = _divide_by_delta(D, n - 1)
        poly = series_to_poly(quotient, W, guard)
    except (ValuationError, NotInSpanError) as e:
        raise LogicError("H_{} is not Delta^{} times a weight {} form: "
                         "{}".format(n, n - 1, W, e.message))
    log.debug("H_%d / Delta^%d = %s", n, n - 1, poly)

    e4 = W % 12 == 4
    if e4:
        poly = poly.divide_x()
    constant, primitive = poly.primitive()
    if constant == 0:
        raise LogicError("H_{} vanished to order {}.".format(n, order))
    try:
        primitive.xy_terms()
    except WeightError as e:
        raise LogicError("H_{} quotient {}".format(n, e.message))

    recon = delta(order).series**(n - 1)*evaluate(primitive, order).series*constant
    if e4:
        recon = recon*eisenstein(4, order).series
    index = recon.first_difference(D)
    if index is not None:
        raise LogicError("Reconstruction of H_{} differs at q^{}.".format(n, index))

    result = DiscoveryResult(n, e4, primitive, constant, order, True)
    log.info("discover n=%d: constant %s, poly %s", n, constant,
             result.xy_string())
    return result

class SurveyEntry(object):
    """Reduction of det(minor)/Delta^(n-1) for one minor.

    Attributes:
        spec (eisdet.hankel.MinorSpec): the minor.
        quotient_weight (int): W1 = weight - 12(n-1).
        kind (str): "zero", "one-dimensional" or "two-dimensional".
        poly (eisdet.ring.MFPoly): the quotient on the E4, E6 basis.
    """
    def __init__(self, spec, poly):
        self.spec = spec
        self.quotient_weight = spec.quotient_weight
        self.poly = poly
        dimension = len(basis_monomials(self.quotient_weight))
        if poly.is_zero():
            self.kind = "zero"
        elif dimension == 1:
            self.kind = "one-dimensional"
        else:
            self.kind = "two-dimensional"

    @property
    def factor(self):
        """str: the Eisenstein factor of a one-dimensional quotient."""
        if self.kind != "one-dimensional":
            return None
        return "1" if self.quotient_weight == 0 else "E{}".format(self.quotient_weight)

    @property
    def constant(self):
        """fractions.Fraction: c with det = c * factor * Delta^(n-1)."""
        if self.kind != "one-dimensional":
            return None
        return self.poly.items()[0][1]

    def to_dict(self):
        from eisdet.io import poly_to_dict
        return {
            "spec": self.spec.label,
            "n": self.spec.n,
            "quotient_weight": self.quotient_weight,
            "kind": self.kind,
            "factor": self.factor,
            "constant": None if self.constant is None else rational_str(self.constant),
            "poly": poly_to_dict(self.poly)
        }

def _index_sets(n, max_index, max_sum):
    for combo in combinations(range(1, max_index + 1), n):
        if sum(combo) <= max_sum:
            yield list(combo)

def small_minors(max_n, max_index, max_weight=14):
    """Yields every minor with at most `max_n` rows, indices up to
    `max_index` and quotient weight at most `max_weight`.
    """
    for n in range(1, max_n + 1):
        bound = (max_weight + 12*(n - 1))//2
        least = n*(n + 1)//2
        for rows in _index_sets(n, max_index, bound - least):
            for cols in _index_sets(n, max_index, bound - sum(rows)):
                yield minor_spec(rows, cols)

def dimension_one_survey(max_n=5, max_index=12, guard=8, progress=False):
    """Reduces det(minor)/Delta^(n-1) for all minors with quotient weight
    W1 <= 14. For W1 in {0, 4, 6, 8, 10, 14} the quotient space is spanned by
    a single Eisenstein series; W1 = 2 leaves only zero and W1 = 12 is
    reported on its two-dimensional basis.

    Returns:
        list: of :class:`SurveyEntry` in enumeration order.
    """
    specs = list(small_minors(max_n, max_index))
    result = []
    for spec in tqdm(specs, disable=not progress, desc="minors"):
        W1 = spec.quotient_weight
        order = spec.n - 1 + max(len(basis_monomials(W1)), 1) + guard
        quotient = _divide_by_delta(det(build(spec, order)), spec.n - 1)
        result.append(SurveyEntry(spec, series_to_poly(quotient, W1, guard)))
    get_logger("identities").info("surveyed %d minors (n <= %d, index <= %d)",
                                  len(result), max_n, max_index)
    return result

class PatternResult(object):
    """Evaluation of a Hankel determinant with zeroed entries as
    Delta^valuation times a form on the E4, E6 basis.
    """
    def __init__(self, n, pattern, weight, valuation, poly, order):
        self.n = n
        self.pattern = pattern
        self.weight = weight
        self.valuation = valuation
        self.poly = poly
        self.order = order

    def to_dict(self):
        from eisdet.io import poly_to_dict
        return {
            "n": self.n,
            "pattern": "{}:{}".format(self.pattern.mode,
                                      ",".join(map(str, self.pattern.moduli))),
            "weight": self.weight,
            "delta_power": self.valuation,
            "poly": None if self.poly is None else poly_to_dict(self.poly),
            "order": self.order
        }

def pattern_determinant(n, pattern, order=None, guard=8):
    """Evaluates H_n after replacing entries by zero according to `pattern`.

    Args:
        n (int): matrix size.
        pattern (eisdet.hankel.ZeroPattern): which entries vanish.
        order (int): truncation order; defaults to the dimension of the
          weight 2n(n+1) space plus `guard`.

    Returns:
        PatternResult: `poly` is `None` when the determinant vanishes.
    """
    weight = 2*n*(n + 1)
    minimum = len(basis_monomials(weight)) + guard
    if order is None:
        order = minimum
    elif order < minimum:
        raise InsufficientOrderError("Pattern determinant for n = {} needs "
                                     "order >= {}; got {}.".format(n, minimum,
                                                                   order),
                                     minimum=minimum)
    D = det(build(hankel_spec(n), order, pattern))
    v = D.valuation()
    if v is None:
        return PatternResult(n, pattern, weight, None, None, order)
    poly = series_to_poly(_divide_by_delta(D, v), weight - 12*v, guard)
    return PatternResult(n, pattern, weight, v, poly, order)

elliptic_ids = ("3.10", "3.11", "3.13", "1.5:k", "3.8:printed", "3.8:z2m",
                "3.9:printed", "3.9:z2m")
"""tuple: labels of the elliptic-function checks."""

def _elliptic_check(id, order, m):
    from eisdet import jacobi
    if id in ("3.10", "3.11"):
        report = jacobi.verify_e2m(2 if id == "3.10" else 3, order, "z2m")
        report.id = id
        return report
    if id == "3.13":
        return jacobi.verify_delta_param(order)
    if id == "1.5:k":
        return jacobi.verify_15_via_k()
    kind, variant = id.split(":")
    check = jacobi.verify_e2m if kind == "3.8" else jacobi.verify_gauss
    return check(m, order, variant)

def verify_any(id, order=64, mode="both", guard=8, m=2):
    """Verifies a catalog identity or one of the elliptic-function checks
    listed in :data:`elliptic_ids`.

    Returns:
        list: of :class:`~eisdet.reports.VerificationReport`.
    """
    if id in elliptic_ids:
        return [_elliptic_check(id, order, m)]
    return [verify(id, order, mode, guard)]

def verify_all(order=64, mode="both", guard=8, m_values=range(2, 9),
               progress=False):
    """Verifies the whole catalog followed by the elliptic-function checks.
    The printed variants of the E_{2m} formulas are informational.

    Returns:
        list: reports in a fixed order.
    """
    tasks = [(r.id, None) for r in catalog()]
    tasks.extend([("3.10", None), ("3.11", None), ("3.13", None), ("1.5:k", None)])
    for kind in ("3.8", "3.9"):
        tasks.extend(("{}:z2m".format(kind), m) for m in m_values)
        tasks.extend(("{}:printed".format(kind), m) for m in (2, 3))

    reports = []
    for id, m in tqdm(tasks, disable=not progress, desc="identities"):
        reports.extend(verify_any(id, order, mode, guard, m or 2))
    return reports
