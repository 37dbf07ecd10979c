import logging


def set_logger(verbose=False, logfile=None):
    logger = logging.getLogger()
    logger.setLevel(logging.DEBUG if verbose else logging.INFO)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    fmt = logging.Formatter(
        fmt="[ %(asctime)s ] %(message)s", datefmt="%a %b %d %H:%M:%S %Y"
    )
    console = logging.StreamHandler()
    console.setFormatter(fmt)
    logger.addHandler(console)
    if logfile:
        filehandler = logging.FileHandler(logfile, "w")
        filehandler.setFormatter(fmt)
        logger.addHandler(filehandler)
    return logger
