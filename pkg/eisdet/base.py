"""Fundamental objects shared by the rest of the package: the common
command-line parser for all `eisdet` scripts and the package-wide debug and
test switches.
"""
import argparse

def exhandler(function, parser, argv=None):
    """If "examples" was specified in the arguments, the specified function
    is called and `None` is returned. Otherwise the full argument dictionary is
    parsed and returned.

    Args:
        function: the function that prints the examples.
        parser (argparse.ArgumentParser): the initialized instance of the
          parser that has the additional, script-specific parameters.
        argv (list): list of `str` arguments; defaults to `sys.argv[1:]`.
    """
    args = vars(bparser.parse_known_args(argv)[0])
    if args["examples"]:
        function()
        return
    if args["verbose"]:
        from eisdet.msg import set_verbosity
        set_verbosity(args["verbose"])
    if args["debug"]:
        set_debug(True)

    args.update(vars(parser.parse_args(argv)))
    return args

def _common_parser():
    """Returns a parser with common command-line options for all the scripts
    in the eisdet suite.
    """
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--examples", action="store_true",
                        help="See detailed help and examples for this script.")
    parser.add_argument("--verbose", default=0, type=int,
                        help="See verbose output as the script runs.")
    parser.add_argument("--debug", action="store_true",
                        help="Log verbose calculation information for debugging.")
    parser.add_argument("--config",
                        help=("YAML run configuration (`.yml`) whose values are "
                              "overridden by explicit flags."))
    return parser

bparser = _common_parser()
testmode = False
"""bool: when True, the package is operating in unit test mode; persisted
caches are never written.
"""
def set_testmode(testing):
    """Sets the package testing mode.
    """
    global testmode
    testmode = testing

debug = False
"""bool: when True, loggers throughout the `eisdet` system are set to debug level
to produce more verbose logging output. Can also be `int` corresponding to level
in :mod:`logging`.
"""
def set_debug(debugging):
    """Sets the package debug mode.
    """
    global debug
    debug = debugging
