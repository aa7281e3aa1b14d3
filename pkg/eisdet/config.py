"""Run configuration shared by every `eisdet` command: truncation order,
verification mode, output format and the number of guard coefficients.
"""
from os import path

from eisdet.exceptions import ConfigError

_defaults = {
    "order": 64,
    "mode": "both",
    "output": "json",
    "guard": 8
}
"""dict: default values for each :class:`RunConfig` attribute.
"""
modes = ("series", "symbolic", "both")
outputs = ("json", "text")

class RunConfig(object):
    """Validated options for a run.

    Args:
        order (int): truncation order N of every q-series; at least 4.
        mode (str): one of "series", "symbolic" or "both".
        output (str): "json" for machine-readable stdout or "text" for
          colored terminal output.
        guard (int): extra q-coefficients checked beyond every linear solve.

    Raises:
        ConfigError: for any value outside its allowed range.
    """
    def __init__(self, order=64, mode="both", output="json", guard=8):
        try:
            self.order = int(order)
            self.guard = int(guard)
        except (TypeError, ValueError):
            raise ConfigError("Order and guard must be integers; got {!r} "
                              "and {!r}.".format(order, guard))
        self.mode = mode
        self.output = output

        if self.order < 4:
            raise ConfigError("Truncation order must be at least 4; got "
                              "{}.".format(self.order))
        if self.guard < 0:
            raise ConfigError("Guard must be non-negative; got "
                              "{}.".format(self.guard))
        if self.mode not in modes:
            raise ConfigError("Mode must be one of {}; got '{}'.".format(
                ", ".join(modes), self.mode))
        if self.output not in outputs:
            raise ConfigError("Output must be one of {}; got '{}'.".format(
                ", ".join(outputs), self.output))

    @property
    def modes(self):
        """list: the individual verification modes to run."""
        if self.mode == "both":
            return ["series", "symbolic"]
        return [self.mode]

    def to_dict(self):
        return {"order": self.order, "mode": self.mode,
                "output": self.output, "guard": self.guard}

    @staticmethod
    def from_args(args):
        """Builds a configuration from parsed command-line arguments. Values
        come from the defaults, then the optional YAML file named by
        `args["config"]`, then any explicit flag.

        Args:
            args (dict): parsed arguments; missing or `None` values are
              skipped.
        """
        values = dict(_defaults)
        if args.get("config"):
            values.update(_read_config(args["config"]))

        for key in _defaults:
            if args.get(key) is not None:
                values[key] = args[key]

        return RunConfig(**values)

def _read_config(filepath):
    """Reads a YAML run configuration. Unknown keys are rejected so that
    typos do not silently fall back to defaults.
    """
    from eisdet.io import read
    full = path.abspath(path.expanduser(filepath))
    try:
        data = read(path.dirname(full), path.basename(full))
    except ValueError as e:
        raise ConfigError(str(e))

    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError("Configuration file '{}' must hold a mapping.".format(
            filepath))
    unknown = set(data) - set(_defaults)
    if unknown:
        raise ConfigError("Unknown configuration keys in '{}': {}.".format(
            filepath, ", ".join(sorted(unknown))))
    return data
