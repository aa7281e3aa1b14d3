"""Utility functions for package paths, the environment and the exact rational
conversions shared by serialization, the catalog and the command line.
"""
from fractions import Fraction
from os import path, environ

import numpy as np

def templates_dir():
    """Returns the absolute path to the folder holding the package's YAML
    data files.
    """
    return path.join(path.dirname(path.abspath(__file__)), "templates")

def cache_dir():
    """Returns the absolute path of the persisted-cache directory named by
    `MODFORMS_CACHE_DIR`, or `None` when the variable is unset or empty.
    """
    target = environ.get("MODFORMS_CACHE_DIR")
    if not target:
        return None
    return path.abspath(path.expanduser(target))

def to_fraction(value):
    """Converts `value` to an exact :class:`fractions.Fraction`.

    Args:
        value: an `int`, `Fraction`, numpy integer or a string of the form
          "p/q" or "p". Floats are rejected since they are never exact.

    Raises:
        ValueError: for floats, unparseable strings or a zero denominator.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (bool, float, np.floating)):
        raise ValueError("Refusing inexact value {!r}.".format(value))
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValueError("Rational strings must be 'p/q' or 'p', got "
                             "'{}'.".format(value))
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ValueError("Zero denominator in '{}'.".format(value))
    raise ValueError("Cannot convert {!r} to a rational.".format(value))

def rational_str(value):
    """Returns the canonical string form "p/q" (or "p" when q = 1) of an
    exact rational.
    """
    return str(to_fraction(value))

def from_factors(spec):
    """Builds an exact rational from a signed prime-power factor description.

    Args:
        spec (dict): with keys `sign` (+1/-1, default 1), `num` and `den`
          (lists of `[base, exponent]` pairs or bare integers).

    Examples:
        >>> from_factors({"sign": -1, "num": [691], "den": [1728, 250]})
        Fraction(-691, 432000)
    """
    def _product(items):
        result = 1
        for item in items or []:
            if isinstance(item, (list, tuple)):
                base, exponent = item
            else:
                base, exponent = item, 1
            result *= int(base)**int(exponent)
        return result

    sign = int(spec.get("sign", 1))
    if sign not in (1, -1):
        raise ValueError("Factor sign must be +1 or -1, got {}.".format(sign))
    return Fraction(sign*_product(spec.get("num")), _product(spec.get("den")))

def parse_matrix(text):
    """Parses a matrix written as "4,8;8,12" (rows separated by semicolons)
    into a 2D numpy object array of rationals.

    Raises:
        ValueError: if the rows have different lengths or the matrix is not
          square.
    """
    rows = [r for r in text.strip().split(";") if r.strip()]
    values = [[to_fraction(v) for v in r.split(",")] for r in rows]
    if len(set(len(r) for r in values)) != 1 or len(values) != len(values[0]):
        raise ValueError("Matrix '{}' is not square.".format(text))
    result = np.empty((len(values), len(values)), dtype=object)
    for i, row in enumerate(values):
        for j, v in enumerate(row):
            result[i, j] = v
    return result
