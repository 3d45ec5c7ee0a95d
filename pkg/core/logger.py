"""
Logging Configuration

Centralized logging setup for the workbench. Console output goes to stderr
so that reports on stdout stay machine-readable; a dated log file is added
when a log directory is configured.
"""

import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional

# colorama is optional on terminals that already speak ANSI
try:
    from colorama import init, Fore, Style
    init()
    COLORAMA_AVAILABLE = True
except ImportError:
    COLORAMA_AVAILABLE = False

    class Fore:
        RED = ''
        YELLOW = ''
        GREEN = ''
        CYAN = ''

    class Style:
        BRIGHT = ''
        RESET_ALL = ''


LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


class ColoredFormatter(logging.Formatter):
    """
    Formatter that colours the level name

    DEBUG cyan, INFO green, WARNING yellow, ERROR red, CRITICAL bright red.
    Colours are skipped when the stream is not a terminal.
    """

    COLORS = {
        'DEBUG': Fore.CYAN,
        'INFO': Fore.GREEN,
        'WARNING': Fore.YELLOW,
        'ERROR': Fore.RED,
        'CRITICAL': Fore.RED + Style.BRIGHT,
    }

    def __init__(self, fmt: str = LOG_FORMAT, datefmt: str = DATE_FORMAT, use_color: bool = True):
        super().__init__(fmt, datefmt)
        self.use_color = use_color and COLORAMA_AVAILABLE

    def format(self, record):
        original_levelname = record.levelname
        if self.use_color:
            color = self.COLORS.get(record.levelname, '')
            record.levelname = f"{color}{record.levelname}{Style.RESET_ALL}"
        result = super().format(record)
        record.levelname = original_levelname
        return result


def setup_logging(
    log_dir: Optional[str] = None,
    log_level: str = "WARNING",
    app_name: str = "workbench"
) -> logging.Logger:
    """
    Configure application logging

    Args:
        log_dir: Directory for a dated log file (None or empty: console only)
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        app_name: Application name for the logger and the log file

    Returns:
        Configured application logger
    """
    level = getattr(logging, str(log_level).upper(), logging.WARNING)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(ColoredFormatter(use_color=sys.stderr.isatty()))

    root_logger = logging.getLogger()
    root_logger.setLevel(level)
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)
    root_logger.addHandler(console_handler)

    log_filename = None
    if log_dir:
        log_path = Path(log_dir)
        log_path.mkdir(parents=True, exist_ok=True)
        log_filename = log_path / f"{app_name.lower()}_{datetime.now().strftime('%Y%m%d')}.log"
        file_handler = logging.FileHandler(log_filename, encoding='utf-8')
        file_handler.setLevel(level)
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT))
        root_logger.addHandler(file_handler)

    logger = logging.getLogger(app_name)
    logger.debug(f"Logging initialized: level={log_level}, log_file={log_filename}")
    return logger


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger instance

    Args:
        name: Logger name (typically the module name)

    Returns:
        Logger instance
    """
    return logging.getLogger(name)
