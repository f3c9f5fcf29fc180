import logging
import sys
from datetime import datetime, timezone

# DEFAULT LOGGING VALUES
# CRITICAL: 50
# ERROR: 40
# WARNING: 30
# REMARKS: 25 (experiment summaries)
# INFO: 20
# DEBUG: 10
REMARKS = 25
logging.addLevelName(REMARKS, "REMARKS")


def remarks(self, message, *args, **kws):
    if self.isEnabledFor(REMARKS):
        self._log(REMARKS, message, args, **kws)


logging.Logger.remarks = remarks

LOG_LEVELS = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "REMARKS": REMARKS,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
}

_HANDLER_FLAG = "_mida_console_handler"


class ColoredLogger(logging.Formatter):
    """Formatter adding a UTC timestamp and a colored level name."""

    COLOR_CODES = {
        "DEBUG": "\033[92m",  # Green
        "INFO": "\033[94m",  # Blue
        "REMARKS": "\033[95m",  # Purple
        "WARNING": "\033[93m",  # Yellow
        "ERROR": "\033[91m",  # Red
        "CRITICAL": "\033[41m",  # Background Red
        "RESET": "\033[0m",
    }

    def format(self, record):
        log_time = datetime.now(timezone.utc).isoformat(timespec="milliseconds").replace("+00:00", "Z")
        color_code = self.COLOR_CODES.get(record.levelname, self.COLOR_CODES["RESET"])
        colored_log_level = color_code + record.levelname + self.COLOR_CODES["RESET"]
        return f"{log_time} [{colored_log_level}] {record.name}: {record.getMessage()}"


def setup_logger(name, level=logging.INFO):
    logger = logging.getLogger(name)
    logger.setLevel(level)

    # Module-level loggers are created at import time; never stack handlers
    if not any(getattr(h, _HANDLER_FLAG, False) for h in logger.handlers):
        console_handler = logging.StreamHandler(sys.stdout)
        console_handler.setFormatter(ColoredLogger())
        setattr(console_handler, _HANDLER_FLAG, True)
        logger.addHandler(console_handler)
        logger.propagate = False

    return logger


def set_package_level(level):
    """Apply one level to every logger created under the ``mida`` package."""
    if isinstance(level, str):
        level = LOG_LEVELS[level.upper()]
    for name, candidate in logging.root.manager.loggerDict.items():
        if isinstance(candidate, logging.Logger) and (name == "mida" or name.startswith("mida.")):
            candidate.setLevel(level)
    return level
