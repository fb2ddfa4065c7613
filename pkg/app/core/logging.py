"""
Simplified logging configuration.
"""
import logging
import sys
from pathlib import Path

from core.config import settings


def setup_logging() -> logging.Logger:
    """Set up toolkit logging configuration."""
    log_format = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    log_level = logging.DEBUG if settings.debug else getattr(logging, settings.log_level.upper(), logging.INFO)

    # stdout is reserved for CLI results, so everything goes to stderr
    handlers = [logging.StreamHandler(sys.stderr)]
    if settings.log_file:
        log_path = Path(settings.log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_path))

    logger = logging.getLogger("matpow")
    logger.setLevel(log_level)
    if not logger.handlers:
        formatter = logging.Formatter(log_format)
        for handler in handlers:
            handler.setFormatter(formatter)
            logger.addHandler(handler)
    logger.propagate = False

    # Restart-level progress is chatty; keep it one level quieter
    search_logger = logging.getLogger("matpow.search")
    search_logger.setLevel(logging.DEBUG if settings.debug else max(log_level, logging.INFO))

    return logger


class ApplicationLogger:
    """Simplified toolkit logger."""

    def __init__(self):
        self.logger = logging.getLogger("matpow")
        self.search_logger = logging.getLogger("matpow.search")

    def debug(self, message: str):
        """Log debug message."""
        self.logger.debug(message)

    def info(self, message: str):
        """Log info message."""
        self.logger.info(message)

    def warning(self, message: str):
        """Log warning message."""
        self.logger.warning(message)

    def error(self, message: str, exception: Exception = None):
        """Log error message."""
        if exception:
            self.logger.error(f"{message}: {str(exception)}", exc_info=True)
        else:
            self.logger.error(message)

    def log_restart(self, restart: int, value: int, iterations: int, capped: bool = False):
        """Log the outcome of one hill-climbing restart."""
        cap_info = " (iteration cap hit)" if capped else ""
        self.search_logger.debug(f"Restart {restart}: value {value} after {iterations} moves{cap_info}")

    def log_search_result(self, n: int, value: int, restart_index: int, total_iterations: int):
        """Log a finished search."""
        self.search_logger.info(
            f"Search n={n} finished: best {value} from restart {restart_index}, {total_iterations} moves total"
        )


# Global logger instances
app_logger = ApplicationLogger()

# Initialize logging
setup_logging()
