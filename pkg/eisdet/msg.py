"""Colored terminal output for verification reports, discovery results and
progress messages. Machine-readable JSON never passes through this module;
see :func:`eisdet.io.dumps`.
"""
from __future__ import print_function
import sys

from termcolor import cprint

verbosity = None
"""int: verbosity level of messages; higher levels print more detail."""
quiet = None
"""bool: in quiet mode only messages with an explicit verbosity level are
printed. The CLI switches this on whenever JSON goes to stdout.
"""
nocolor = False
"""bool: when True, the colored outputs all use the regular print()."""
cenum = {
    "cerrs": 0,
    "cwarn": 1,
    "cinfo": 2,
    "cgens": 3,
    "cstds": 4,
    "cokay": 5
}
"""dict: names of the colors available to :func:`arb`, indexing :data:`icols`.
"""
icols = ["red", "yellow", "cyan", "blue", "white", "green"]

def printer(text, color=None, **kwargs):
    """Prints `text` in `color`; falls back to plain print() when
    :data:`nocolor` is set. Output goes to stderr so that stdout stays
    reserved for JSON documents.
    """
    kwargs.setdefault("file", sys.stderr)
    if nocolor or color is None:
        print(text, **kwargs)
    else:
        cprint(text, color, **kwargs)

def example(script, explain, contents, requirements, output, outputfmt, details):
    """Prints the `--examples` help page for a script.

    Args:
        script (str): title of the script.
        explain (str): paragraph describing what the script does.
        contents (list): of `(before, command, after)` tuples.
        requirements (str): what has to exist before running.
        output (str): what the script produces.
        outputfmt (str): format of the output.
        details (str): anything else worth knowing.
    """
    printer("")
    printer(script.upper(), "yellow")
    printer("=" * 70 + '\n', "yellow")
    for heading, body, col in [("DETAILS", explain, None),
                               (None, requirements, "red"),
                               (None, output, "green"),
                               (None, details, None),
                               ("OUTPUT FORMAT", outputfmt, None)]:
        if heading is not None:
            printer(heading, "blue")
        if body:
            printer(body + '\n', col)

    printer("EXAMPLES", "blue")
    for i, (pre, code, post) in enumerate(contents):
        printer("{}) {}".format(i + 1, pre))
        printer("    " + code, "cyan")
        if post:
            printer('\n' + post)
        printer("")

def arb(text, cols, split):
    """Prints a line of text whose `split`-separated pieces are colored by
    the numeric values in :data:`cenum`.
    """
    stext = text if text[-1] != split else text[0:-1]
    words = stext.split(split)
    for i, word in enumerate(words):
        printer(word, icols[cols[i]], end="")
        printer(split if i < len(words)-1 else "", end="" if i < len(words)-1 else "\n")

def verdict(label, passed, detail="", informational=False):
    """Prints one verification outcome as `label | PASS | detail`.

    Args:
        label (str): identity label, e.g. "2.19" or "3.8:z2m(m=2)".
        passed (bool): outcome of the exact comparison.
        detail (str): what was compared or where it first differed.
        informational (bool): failures are shown as INFO in yellow; they
          are findings, not errors.
    """
    if not will_print(1):
        return
    if passed:
        state, col = "PASS", cenum["cokay"]
    elif informational:
        state, col = "INFO", cenum["cwarn"]
    else:
        state, col = "FAIL", cenum["cerrs"]
    text = "{0:<18}|{1}|{2}".format(label, state, " " + detail if detail else " ")
    arb(text, [cenum["cstds"], col, cenum["cinfo"]], '|')

def set_verbosity(level):
    """Sets the message verbosity level for *all* messages printed.

    Args:
        level (int): a positive integer; higher levels include more detail.
    """
    global verbosity
    verbosity = level

def set_quiet(is_quiet):
    """Sets quiet mode. Quiet mode only prints messages whose verbosity level
    is explicitly allowed by :data:`verbosity`.
    """
    global quiet
    quiet = is_quiet

def will_print(level=1):
    """Returns True if a message at `level` would currently be printed.
    """
    if level == 1:
        return not quiet
    if isinstance(verbosity, bool):
        return verbosity
    if isinstance(verbosity, int):
        return level <= verbosity
    return level <= 0

def warn(text, level=0, prefix=True):
    """Prints `text` as a warning, prefixed by "WARNING"."""
    if will_print(level):
        printer(("WARNING: " if prefix else "") + text, "yellow")

def err(text, level=-1, prefix=True):
    """Prints `text` as an error, prefixed by "ERROR"."""
    if will_print(level):
        printer(("ERROR: " if prefix else "") + text, "red")

def info(text, level=1):
    """Prints `text` as information."""
    if will_print(level):
        printer(text, "cyan")

def okay(text, level=1):
    """Prints `text` as a progress update."""
    if will_print(level):
        printer(text, "green")

def std(text, level=1):
    """Prints `text` without color."""
    if will_print(level):
        printer(text)
