"""Implements logging for verification runs, discovery and the named-series
cache. File logs are only written when a root directory is configured (the
`MODFORMS_CACHE_DIR`); otherwise records are swallowed by a `NullHandler`.
"""
from os import path, makedirs

import logging as log
import logging.handlers, logging.config

from eisdet import base

_filehandler = log.handlers.RotatingFileHandler
_record_format = '%(asctime)-15s %(message)s'
"""str: format string for every file log record.
"""

log.config.dictConfig({
    'version': 1,
    'disable_existing_loggers': False,
})

_loggers = {}
"""dict: keys are `(root, identifier)`; values are :class:`Logger`. At most one entry
exists per identifier; switching roots closes the previous one.
"""

def get_logger(identifier):
    """Returns the shared :class:`Logger` for `identifier`, rooted at the
    configured cache directory (if any).

    Args:
        identifier (str): name of the log, e.g. "identities".
    """
    from eisdet.utility import cache_dir
    root = cache_dir()
    key = (root, identifier)
    if key not in _loggers:
        for stale in [k for k in _loggers if k[1] == identifier]:
            _loggers.pop(stale).close()
        _loggers[key] = Logger(root, identifier)
    return _loggers[key]

class Logger(object):
    """Handles the logging of events for an `eisdet` component.

    Args:
        root (str): path to the directory under which a `logs` folder is
          created; `None` disables file logging.
        identifier (str): name of the log (unique in the application).

    Attributes:
        logger (logging.Logger): logger class from built-in logging module.
        handlers (list): file handlers attached to :attr:`logger`.
        attached (list): every handler this instance added to :attr:`logger`,
          including the `NullHandler` used without a root.
    """
    def __init__(self, root, identifier):
        self.logger = log.getLogger("eisdet.{}".format(identifier))
        if base.debug == True:
            self.logger.setLevel(log.DEBUG)
        elif isinstance(base.debug, int) and not isinstance(base.debug, bool):
            self.logger.setLevel(base.debug)
        else:
            self.logger.setLevel(log.INFO)

        self.handlers = []
        self.attached = []
        if root is None:
            null = log.NullHandler()
            self.logger.addHandler(null)
            self.attached.append(null)
            self.root = None
            return

        self.root = path.join(root, "logs")
        if not path.isdir(self.root):
            makedirs(self.root)

        logdict = {
            "maxBytes": 10485760,
            "backupCount": 5
        }
        formatter = log.Formatter(_record_format)
        for suffix, level in [("debug.log", log.DEBUG), ("log", log.INFO),
                              ("error.log", log.WARNING)]:
            target = path.join(self.root, "{}.{}".format(identifier, suffix))
            handler = _filehandler(target, **logdict)
            handler.setLevel(level)
            handler.setFormatter(formatter)
            self.logger.addHandler(handler)
            self.handlers.append(handler)
        self.attached.extend(self.handlers)

    def close(self):
        """Detaches and closes every handler this logger added so that a
        replacement for the same identifier starts from a clean
        `logging.Logger`.
        """
        for handler in self.attached:
            self.logger.removeHandler(handler)
            handler.close()
        self.attached = []
        self.handlers = []

    def _flush(self):
        for handler in self.handlers:
            handler.flush()

    def info(self, message, *args):
        """Logs `message` %-formatted with `args` and flushes the files."""
        self.logger.info(message, *args)
        self._flush()

    def debug(self, message, *args):
        self.logger.debug(message, *args)

    def error(self, message, *args):
        self.logger.error(message, *args)
        self._flush()

    def warning(self, message, *args):
        self.logger.warning(message, *args)
        self._flush()
