import logging
import sys

import ecs_logging

PACKAGE_LOGGER = "eulerZeta"
TEXT_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def get_logger(name):
    return logging.getLogger(name)


def setup_logging(debug: bool = False, structured: bool = False) -> logging.Logger:
    """Attach a single stderr handler to the package logger.

    Parameters
    ----------
    debug : bool
        Log at DEBUG level instead of WARNING.
    structured : bool
        Emit ECS JSON lines instead of plain text.

    Returns
    -------
    logging.Logger
        The configured package logger.
    """
    handler = logging.StreamHandler(sys.stderr)
    if structured:
        handler.setFormatter(ecs_logging.StdlibFormatter())
    else:
        handler.setFormatter(logging.Formatter(TEXT_FORMAT))
    logger = logging.getLogger(PACKAGE_LOGGER)
    logger.handlers[:] = [handler]
    logger.setLevel(logging.DEBUG if debug else logging.WARNING)
    logger.propagate = False
    return logger
