#!/usr/bin/python
def examples():
    """Prints examples of using the script to the console using colored
    output.
    """
    from eisdet import msg
    script = "EISDET Eisenstein Series Determinant Toolkit"
    explain = ("Computes exact q-expansions of Eisenstein series and the "
               "discriminant, evaluates Hankel determinants and minors of "
               "Eisenstein series, verifies the cataloged determinant "
               "identities in series and symbolic mode, finds the evaluation "
               "of the n x n Hankel determinant and checks the formulas for "
               "E_2m in terms of the Jacobi elliptic function ns^2.")
    contents = [(("Verify the whole catalog in both modes, 64 coefficients."),
                 "eisdet verify --id all --order 64 --mode both",
                 "Exits with 0 only if every identity passes. The printed "
                 "elliptic variants are informational."),
                (("Expand the discriminant."),
                 "eisdet expand --series delta --order 5", ""),
                (("Find the evaluation of the 4 x 4 Hankel determinant."),
                 "eisdet discover --n 4", ""),
                (("Reduce E12 onto the E4, E6 basis."),
                 "eisdet reduce --series E12 --weight 12", ""),
                (("Classify a subscript matrix."),
                 "eisdet classify --matrix '4,8;8,12'", ""),
                (("Laurent coefficients of ns^2 up to m = 5."),
                 "eisdet jacobi --m 5", ""),
                (("Hankel determinant with every entry of weight divisible "
                  "by 4 removed."),
                 "eisdet pattern --n 3 --zero whenever:4", "")]
    required = ("Nothing; the identity catalog ships with the package. Set "
                "MODFORMS_CACHE_DIR to persist named series and write logs.")
    output = ("JSON on stdout (default) or colored text with --output text.")
    details = ("Exit codes: 0 when every requested verification passed, 1 "
               "when one failed, 2 for invalid input.")
    outputfmt = ("Every rational is written as a 'p/q' string; keys are "
                 "sorted so identical runs produce identical bytes.")

    msg.example(script, explain, contents, required, output, outputfmt, details)

_run_options = {
    "--order": {"type": int,
                "help": "Truncation order N of every q-series (default 64)."},
    "--guard": {"type": int,
                "help": ("Extra coefficients checked beyond each linear solve "
                         "(default 8).")},
    "--output": {"choices": ["json", "text"],
                 "help": "Machine-readable JSON (default) or colored text."},
    "--mode": {"choices": ["series", "symbolic", "both"],
               "help": "Verification mode (default both)."}
}
"""dict: options shared by every subcommand; they default to `None` so that
:meth:`eisdet.config.RunConfig.from_args` can tell them from a config file.
"""

_script_options = {
    "expand": {
        "help": "Print the q-expansion of a named series.",
        "--series": {"required": True,
                     "help": "E4, E6, ..., delta, k2, z2, theta2_4 or theta3_4."}
    },
    "det": {
        "help": "Determinant of a minor of the Hankel array (E_2(i+j)).",
        "--spec": {"required": True,
                   "help": "hankel:N, chi:N,M or minor:ROWS/COLS."},
        "--zero": {"help": "Zero pattern such as unless:6 or whenever:4,6."}
    },
    "verify": {
        "help": "Verify an identity, or 'all' of them.",
        "--id": {"required": True,
                 "help": ("Catalog label (1.5 ... 2.24), 3.10, 3.11, 3.13, "
                          "1.5:k, 3.8:printed|z2m, 3.9:printed|z2m or all.")},
        "--m": {"type": int, "default": 2,
                "help": "Half the weight for the 3.8 and 3.9 checks."}
    },
    "discover": {
        "help": "Find the evaluation of the n x n Hankel determinant.",
        "--n": {"type": int, "required": True, "help": "Matrix size."}
    },
    "reduce": {
        "help": "Write a series on the E4, E6 monomial basis.",
        "--series": {"required": True,
                     "help": "Named series or a JSON file from `expand`."},
        "--weight": {"type": int, "required": True, "help": "Weight of the form."}
    },
    "classify": {
        "help": "Constant-weight test and Hankel-minor recovery.",
        "--matrix": {"required": True,
                     "help": "Subscripts with rows split by ';', e.g. 4,8;8,12."}
    },
    "jacobi": {
        "help": "Laurent coefficients (ns^2)_m as polynomials in k^2.",
        "--m": {"type": int, "required": True, "help": "Largest m."}
    },
    "survey": {
        "help": "Reduce every small minor whose quotient weight is <= 14.",
        "--n": {"type": int, "default": 5, "help": "Largest minor size."},
        "--max-index": {"type": int, "default": 12,
                        "help": "Largest row or column index."}
    },
    "pattern": {
        "help": "Hankel determinant with entries zeroed by weight.",
        "--n": {"type": int, "required": True, "help": "Matrix size."},
        "--zero": {"required": True,
                   "help": "Zero pattern such as unless:6 or whenever:4,6."}
    }
}
"""dict: keys are subcommands; values hold the subcommand help and its
:meth:`argparse.ArgumentParser.add_argument` keyword arguments.
"""

def _parser_options(argv=None):
    """Parses the options and arguments from the command line."""
    import argparse
    from eisdet import base
    pdescr = "Exact Eisenstein series, Hankel determinants and identities."
    parser = argparse.ArgumentParser(prog="eisdet", description=pdescr)
    common = argparse.ArgumentParser(add_help=False)
    for arg, options in _run_options.items():
        common.add_argument(arg, **options)

    subparsers = parser.add_subparsers(dest="command")
    subparsers.required = True
    for command, options in _script_options.items():
        options = dict(options)
        sub = subparsers.add_parser(command, help=options.pop("help"),
                                    parents=[base.bparser, common])
        for arg, kwargs in options.items():
            sub.add_argument(arg, **kwargs)

    return base.exhandler(examples, parser, argv)

def _load_series(name, order):
    from os import path
    from eisdet.modforms import named_series
    if path.isfile(name):
        import json
        from eisdet.io import series_from_dict
        with open(name) as f:
            data = json.load(f)
        if isinstance(data, dict) and "series" in data:
            data = data["series"]
        return series_from_dict(data)
    return named_series(name, order)

def _expand(args, config):
    from eisdet.io import series_to_dict
    from eisdet.modforms import named_series
    series = named_series(args["series"], config.order)
    result = series_to_dict(series)
    result["name"] = args["series"]
    return result, True

def _det(args, config):
    from eisdet.hankel import parse_spec, parse_pattern, build, det
    from eisdet.io import series_to_dict
    spec = parse_spec(args["spec"])
    pattern = parse_pattern(args["zero"]) if args["zero"] else None
    D = det(build(spec, config.order, pattern))
    return {"spec": spec.label, "weight": spec.weight,
            "zero": args["zero"], "valuation": D.valuation(),
            "det": series_to_dict(D)}, True

def _verify(args, config):
    from eisdet.identities import verify_all, verify_any
    from eisdet.reports import all_passed
    if args["id"] == "all":
        reports = verify_all(config.order, config.mode, config.guard,
                             progress=config.output == "text")
    else:
        reports = verify_any(args["id"], config.order, config.mode,
                             config.guard, args["m"])
    passed = all_passed(reports)
    return {"reports": [r.to_dict() for r in reports], "passed": passed,
            "config": config.to_dict()}, passed, reports

def _discover(args, config):
    from eisdet.identities import discover
    return discover(args["n"], config.order, config.guard).to_dict(), True

def _reduce(args, config):
    from eisdet.io import poly_to_dict
    from eisdet.ring import series_to_poly
    series = _load_series(args["series"], config.order)
    poly = series_to_poly(series, args["weight"], config.guard)
    result = poly_to_dict(poly)
    result["text"] = str(poly)
    return result, True

def _classify(args, config):
    from eisdet.hankel import classify
    from eisdet.utility import parse_matrix
    return classify(parse_matrix(args["matrix"])).to_dict(), True

def _jacobi(args, config):
    from eisdet.io import kpoly_to_dict
    from eisdet.jacobi import ns2_coefficients
    coefficients = ns2_coefficients(args["m"])
    return {"ns2": [{"m": m + 1, "coeffs": kpoly_to_dict(p),
                     "factored": p.factor_string()}
                    for m, p in enumerate(coefficients)]}, True

def _survey(args, config):
    from eisdet.identities import dimension_one_survey
    entries = dimension_one_survey(args["n"], args["max_index"], config.guard,
                                   progress=config.output == "text")
    return {"entries": [e.to_dict() for e in entries]}, True

def _pattern(args, config):
    from eisdet.hankel import parse_pattern
    from eisdet.identities import pattern_determinant
    result = pattern_determinant(args["n"], parse_pattern(args["zero"]),
                                 guard=config.guard)
    return result.to_dict(), True

_commands = {
    "expand": _expand,
    "det": _det,
    "verify": _verify,
    "discover": _discover,
    "reduce": _reduce,
    "classify": _classify,
    "jacobi": _jacobi,
    "survey": _survey,
    "pattern": _pattern
}

def _render(command, result, reports):
    from eisdet import msg
    if reports is not None:
        for report in reports:
            report.render()
        if result["passed"]:
            msg.okay("All {} verifications passed.".format(len(reports)))
        else:
            msg.err("Some verifications failed.", prefix=False, level=1)
        return
    if command == "discover":
        msg.info("det H_{} = ({}) * Delta^{}{} * P".format(
            result["n"], result["constant"], result["n"] - 1,
            " * E4" if result["e4_factor"] else ""))
        msg.std("P = {}".format(result["poly_xy"]))
        if not result["full_support"]:
            msg.warn("Top-degree monomials with zero coefficient: {}".format(
                ", ".join("x^{} y^{}".format(i, j)
                          for i, j in result["missing_monomials"])))
        return
    if command == "reduce":
        msg.std(result["text"])
        return
    from eisdet.io import dumps
    msg.std(dumps(result))

def run(args):
    """Dispatches a parsed command line and returns the exit code: 0 when
    everything requested passed, 1 when a verification failed and 2 for
    invalid input.
    """
    from eisdet import msg
    from eisdet.config import RunConfig
    from eisdet.exceptions import Error
    from eisdet.io import dumps
    from eisdet.logs import get_logger

    if args is None:
        return 0
    log = get_logger("cli")
    try:
        config = RunConfig.from_args(args)
        msg.set_quiet(config.output == "json")
        outcome = _commands[args["command"]](args, config)
    except Error as e:
        msg.err(e.message)
        minimum = getattr(e, "minimum", None)
        if minimum is not None:
            msg.err("Use --order {} or larger.".format(minimum), prefix=False)
        log.error("%s failed: %s", args["command"], e.message)
        return 2
    except ValueError as e:
        msg.err(str(e))
        log.error("%s failed: %s", args["command"], e)
        return 2

    result, passed = outcome[0], outcome[1]
    reports = outcome[2] if len(outcome) > 2 else None
    if config.output == "json":
        print(dumps(result))
    else:
        _render(args["command"], result, reports)

    code = 0 if passed else 1
    log.info("%s finished with exit code %d", args["command"], code)
    return code

def main(argv=None):
    """Entry point of the `eisdet` console script.

    Args:
        argv (list): arguments without the program name; defaults to
          `sys.argv[1:]`.
    """
    try:
        args = _parser_options(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    return run(args)

if __name__ == '__main__': # pragma: no cover
    import sys
    sys.exit(main())
