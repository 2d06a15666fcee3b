import logging
import sys


LOG_FORMAT = '[%(levelname)s][%(asctime)s] %(message)s'

# Handlers installed by the last configure() call.
_installed_handlers = []


def configure(log_path: str = None, silent: bool = False, debug: bool = False):
    """Route the root logger to stderr and/or a file.

    Stdout is reserved for command output. Calling this again replaces the
    handlers of the previous call.
    """
    root = logging.getLogger()
    for handler in _installed_handlers:
        root.removeHandler(handler)
        handler.close()
    _installed_handlers.clear()

    handlers = []
    if not silent:
        handlers.append(logging.StreamHandler(sys.stderr))
    if log_path:
        handlers.append(logging.FileHandler(log_path))
    if not handlers:
        handlers.append(logging.NullHandler())

    formatter = logging.Formatter(LOG_FORMAT)
    for handler in handlers:
        handler.setFormatter(formatter)
        root.addHandler(handler)
        _installed_handlers.append(handler)

    root.setLevel(logging.DEBUG if debug else logging.INFO)
