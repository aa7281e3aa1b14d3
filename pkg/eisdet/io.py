"""Functions for interacting with the input and output formats: YAML
templates (run configurations and the identity catalog) and the canonical
JSON documents for series, polynomials and reports.
"""
from os import path, makedirs
import json

import yaml

from eisdet.utility import to_fraction, rational_str

def is_link(value):
    """Determines whether the specified value is a link to another YAML
    file, i.e. a string starting with ":".
    """
    return isinstance(value, str) and len(value) > 1 and value[0] == ":"

def _unpack_obj(context, obj):
    """Replaces every link (see :func:`is_link`) inside the dictionaries and
    lists of `obj` by the contents of the YAML file it points to, resolved
    relative to the folder `context`. Dictionaries are updated in place.
    """
    if is_link(obj):
        return read(context, obj)
    if isinstance(obj, dict):
        for k, o in obj.items():
            obj[k] = _unpack_obj(context, o)
        return obj
    if isinstance(obj, (list, tuple)):
        return [_unpack_obj(context, o) for o in obj]
    return obj

def read(context, yfile):
    """Reads in the specified YAML file, following any additional file
    directives to compile a full representation of the template hierarchy.

    Args:
        context (str): path to the folder where the yaml file is located.
          Needed for relative paths of file links.
        yfile (str): name of the YAML file *relative* to `context`. May
          include the `.yml` extension; `.yaml` files are not accepted.

    Raises:
        ValueError: if no `.yml` file exists at the location.
    """
    name = yfile[1:] if is_link(yfile) else yfile
    root = path.abspath(path.join(context, name))

    if root.endswith(".yml"):
        root = root[:-4]
    if path.isfile(root + ".yml"):
        target = root + ".yml"
    else:
        emsg = ("The specified template file '{}' was not found relative "
                "to the given context directory ('{}'). Note that all files"
                " should use the `.yml` extension, *not* `.yaml`.")
        raise ValueError(emsg.format(yfile, context))

    with open(target, 'r') as stream:
        result = yaml.safe_load(stream)

    return _unpack_obj(path.dirname(target), result)

def series_to_dict(series):
    """Returns the JSON-ready dictionary for a
    :class:`~eisdet.series.QSeries` with rational coefficients.
    """
    return {
        "var": series.var,
        "order": series.order,
        "coeffs": [rational_str(c) for c in series.coeffs]
    }

def series_from_dict(data):
    """Restores a :class:`~eisdet.series.QSeries` from :func:`series_to_dict`
    output.

    Raises:
        ValueError: if `data` is not a mapping with `var`, `order` and
          `coeffs`.
    """
    from eisdet.series import QSeries
    if not isinstance(data, dict):
        raise ValueError("A series document must be a JSON object.")
    missing = [k for k in ("var", "order", "coeffs") if k not in data]
    if missing:
        raise ValueError("Series document lacks {}.".format(", ".join(missing)))
    if not isinstance(data["coeffs"], list):
        raise ValueError("Series coefficients must be a list of strings.")
    coeffs = [to_fraction(c) for c in data["coeffs"]]
    return QSeries(coeffs, order=int(data["order"]), var=data["var"])

def poly_to_dict(poly):
    """Returns the JSON-ready dictionary for a :class:`~eisdet.ring.MFPoly`;
    monomials are listed by descending power of X.
    """
    result = {
        "terms": [{"a": a, "b": b, "c": rational_str(c)}
                  for (a, b), c in poly.items()]
    }
    if poly.weight is not None:
        result["weight"] = poly.weight
    return result

def poly_from_dict(data):
    """Restores a :class:`~eisdet.ring.MFPoly` from :func:`poly_to_dict`
    output.
    """
    from eisdet.ring import MFPoly
    terms = {(int(t["a"]), int(t["b"])): to_fraction(t["c"])
             for t in data["terms"]}
    return MFPoly(terms)

def kpoly_to_dict(kpoly):
    """Returns the coefficients of a :class:`~eisdet.jacobi.KPoly` in
    ascending powers of k^2 as rational strings.
    """
    return [rational_str(c) for c in kpoly.coeffs]

def dumps(obj):
    """Serializes `obj` as canonical JSON: sorted keys and two-space
    indentation, so identical inputs always produce identical bytes.
    """
    return json.dumps(obj, sort_keys=True, indent=2)

def _cache_file(root, name):
    return path.join(root, "series", "{}.json".format(name))

def load_cached_series(root, name):
    """Loads a persisted named series from the cache folder `root`.

    Returns:
        eisdet.series.QSeries: the cached series or `None` if there is no
        readable file for `name`.
    """
    target = _cache_file(root, name)
    if not path.isfile(target):
        return None
    try:
        with open(target) as f:
            return series_from_dict(json.load(f))
    except (ValueError, KeyError, TypeError):
        return None

def save_cached_series(root, name, series):
    """Writes a named series to the cache folder `root` using the same
    schema as the `expand` command output.
    """
    target = _cache_file(root, name)
    folder = path.dirname(target)
    if not path.isdir(folder):
        makedirs(folder)
    with open(target, 'w') as f:
        f.write(dumps(series_to_dict(series)))
    return target
