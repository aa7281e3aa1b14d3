"""Named q-expansions: the Eisenstein series E_{2n}, the discriminant Delta
and the elliptic parameters k^2 and z^2 as series in the nome.

Every named series is memoized per process behind a lock. The cache keeps the
longest expansion computed so far and truncates it for shorter requests. When
`MODFORMS_CACHE_DIR` is set, expansions are also persisted as JSON files with
the same schema as the `expand` command output.
"""
import re
import threading

from sympy import divisors

from eisdet import base
from eisdet.arith import sigma, eisenstein_scale
from eisdet.exceptions import WeightError
from eisdet.logs import get_logger
from eisdet.series import QSeries, eta24
from eisdet.utility import cache_dir

_cache = {}
"""dict: keys are series names; values are the longest
:class:`~eisdet.series.QSeries` computed for that name.
"""
_lock = threading.RLock()

class WeightedSeries(object):
    """A q-expansion together with its weight as a modular form.

    Args:
        series (eisdet.series.QSeries): the expansion.
        weight (int): non-negative even weight.
    """
    __hash__ = None

    def __init__(self, series, weight):
        self.series = series
        self.weight = weight

    @property
    def order(self):
        return self.series.order

    @property
    def coeffs(self):
        return self.series.coeffs

    def __repr__(self):
        return "WeightedSeries(weight={}, {})".format(self.weight, self.series)

    def _same_weight(self, other):
        if self.weight != other.weight:
            raise WeightError("Cannot add forms of weight {} and {}.".format(
                self.weight, other.weight))

    def __add__(self, other):
        self._same_weight(other)
        return WeightedSeries(self.series + other.series, self.weight)

    def __sub__(self, other):
        self._same_weight(other)
        return WeightedSeries(self.series - other.series, self.weight)

    def __neg__(self):
        return WeightedSeries(-self.series, self.weight)

    def __mul__(self, other):
        if isinstance(other, WeightedSeries):
            return WeightedSeries(self.series*other.series,
                                  self.weight + other.weight)
        return WeightedSeries(self.series*other, self.weight)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return WeightedSeries(self.series/scalar, self.weight)

    def __pow__(self, e):
        return WeightedSeries(self.series**e, self.weight*e)

    def __eq__(self, other):
        if not isinstance(other, WeightedSeries):
            return NotImplemented
        return self.weight == other.weight and self.series == other.series

def _cached(name, order, builder):
    """Returns the named series at `order`, computing it with
    `builder(order)` only when no long enough expansion is cached.
    """
    log = get_logger("modforms")
    with _lock:
        hit = _cache.get(name)
        if hit is not None and hit.order >= order:
            return hit.truncate(order)

        root = None if base.testmode else cache_dir()
        if root is not None:
            from eisdet.io import load_cached_series
            stored = load_cached_series(root, name)
            if stored is not None and stored.order >= order:
                log.debug("Read %s to order %d from %s.", name, stored.order, root)
                _cache[name] = stored
                return stored.truncate(order)

        log.debug("Computing %s to order %d.", name, order)
        result = builder(order)
        _cache[name] = result
        if root is not None:
            from eisdet.io import save_cached_series
            save_cached_series(root, name, result)
        return result

def clear_cache():
    """Empties the in-process series cache."""
    with _lock:
        _cache.clear()

def _check_weight(two_n):
    if two_n == 2:
        raise WeightError("E2 is not handled: it is only quasi-modular and its "
                          "modular completion carries the non-holomorphic term "
                          "-3/(pi*y).")
    if not isinstance(two_n, int) or two_n % 2 == 1 or two_n < 4:
        raise WeightError("Eisenstein series need an even weight >= 4; got "
                          "{}.".format(two_n))

def _eisenstein_series(two_n, order):
    scale = eisenstein_scale(two_n)
    coeffs = [1] + [scale*sigma(two_n - 1, m) for m in range(1, order)]
    return QSeries(coeffs, order)

def eisenstein(two_n, order):
    """Returns the Eisenstein series E_{2n} of weight `two_n`.

    Args:
        two_n (int): even weight, at least 4.
        order (int): truncation order.

    Raises:
        WeightError: for weight 2, odd weights and weights below 4.
    """
    _check_weight(two_n)
    series = _cached("E{}".format(two_n), order,
                     lambda N: _eisenstein_series(two_n, N))
    return WeightedSeries(series, two_n)

def delta(order, route="product"):
    """Returns the discriminant as a weight-12 form.

    Args:
        order (int): truncation order.
        route (str): "product" for q*prod(1 - q^r)^24, "formula" for
          (E4^3 - E6^2)/1728.
    """
    if route == "product":
        return WeightedSeries(_cached("delta", order, eta24), 12)
    elif route == "formula":
        E4, E6 = eisenstein(4, order), eisenstein(6, order)
        return (E4**3 - E6**2)/1728
    raise ValueError("Unknown discriminant route '{}'.".format(route))

def delta_unit(order):
    """Returns Delta/q, the unit series 1 - 24q + 252q^2 - ..., at `order`."""
    return delta(order + 1).series.shift_down(1)

def _theta3(order):
    """sum over all integers n of q^(n^2)."""
    coeffs = [0]*order
    n = 0
    while n*n < order:
        coeffs[n*n] += 1 if n == 0 else 2
        n += 1
    return QSeries(coeffs, order)

def _triangular(order):
    """sum over n >= 0 of q^(n(n+1))."""
    coeffs = [0]*order
    n = 0
    while n*(n + 1) < order:
        coeffs[n*(n + 1)] = 1
        n += 1
    return QSeries(coeffs, order)

def _theta3_4(order):
    coeffs = [1] + [8*sum(d for d in divisors(n) if d % 4 != 0)
                    for n in range(1, order)]
    return QSeries(coeffs, order)

def _theta2_4(order):
    if order == 0:
        return QSeries([], 0)
    return (_triangular(order - 1)**4).shift_up(1)*16

def theta_fourth_powers(order):
    """Returns the theta constants of the nome q.

    Returns:
        tuple: `(theta2^4, theta3^4, theta2^2, theta3^2)`; the fourth powers
        are series in q at `order`, the squares are series in w (q = w^2) at
        order `2*order`. theta4^4 is `theta3^4 - theta2^4`.
    """
    t24 = _cached("theta2_4", order, _theta2_4)
    t34 = _cached("theta3_4", order, _theta3_4)
    t22 = (_triangular(order)**2).inflate().shift_up(1).truncate(2*order)*4
    t32 = (_theta3(order)**2).inflate()
    return t24, t34, t22, t32

def _k2(order):
    t24, t34, _, _ = theta_fourth_powers(order)
    return t24*t34.invert()

def elliptic_params(order):
    """Returns the squared modulus and z = 2K/pi as series in the nome.

    Returns:
        tuple: `(k2, z2, k, z)` where `k2 = theta2^4/theta3^4` and
        `z2 = theta3^4` are series in q at `order`; `k` (order `2*order - 1`)
        and `z` (order `2*order`) are their square roots as series in w, on
        the branches starting with 4w and 1.
    """
    k2 = _cached("k2", order, _k2)
    z2 = _cached("z2", order, _theta3_4)
    k = k2.inflate().sqrt_unit_times_monomial((16, 2))
    z = z2.inflate().sqrt_unit_times_monomial((1, 0))
    return k2, z2, k, z

_rxeisenstein = re.compile(r"^E(\d+)$")

def named_series(name, order):
    """Resolves a command-line series name.

    Args:
        name (str): "E4" ... "E<2n>", "delta", "k2", "z2", "theta2_4" or
          "theta3_4".
        order (int): truncation order.

    Raises:
        ValueError: for unknown names.
    """
    match = _rxeisenstein.match(name)
    if match:
        return eisenstein(int(match.group(1)), order).series
    if name == "delta":
        return delta(order).series
    if name in ("k2", "z2"):
        k2, z2, _, _ = elliptic_params(order)
        return k2 if name == "k2" else z2
    if name == "theta2_4":
        return theta_fourth_powers(order)[0]
    if name == "theta3_4":
        return theta_fourth_powers(order)[1]
    raise ValueError("Unknown series '{}'. Use E4, E6, ..., delta, k2, z2, "
                     "theta2_4 or theta3_4.".format(name))
