"""
Logging utilities for the moduli pairing engine
"""

import logging
import os
from datetime import datetime

from dotenv import load_dotenv

load_dotenv()


def setup_logger():
    """
    Set up and return the shared logger for the engine.

    Records go to a dated file under MODULI_LOG_DIR (default: logs/ next to the
    sources). Nothing is written to stdout, which carries command results only.
    """
    log_dir = os.getenv("MODULI_LOG_DIR") or os.path.join(os.path.dirname(os.path.dirname(__file__)), "logs")
    if not os.path.exists(log_dir):
        os.makedirs(log_dir, exist_ok=True)

    logger = logging.getLogger("moduli")
    level_name = os.getenv("MODULI_LOG_LEVEL", "INFO").upper()
    logger.setLevel(getattr(logging, level_name, logging.INFO))
    logger.propagate = False

    # setup_logger may run again after a reload; keep a single file handler
    if any(isinstance(h, logging.FileHandler) for h in logger.handlers):
        return logger

    current_date = datetime.now().strftime("%Y-%m-%d")
    log_file = os.path.join(log_dir, f"moduli_{current_date}.log")
    file_handler = logging.FileHandler(log_file)

    formatter = logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
    file_handler.setFormatter(formatter)
    logger.addHandler(file_handler)

    return logger


# Global logger instance
logger = setup_logger()
