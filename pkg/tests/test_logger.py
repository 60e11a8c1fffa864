"""Tests for logging setup."""

import logging
import sys

from free_links.logger import get_logger, setup_logging


class TestSetupLogging:
    """Test cases for setup_logging."""

    def teardown_method(self):
        root = logging.getLogger()
        for handler in root.handlers:
            handler.close()
        root.handlers.clear()

    def test_console_on_stderr(self):
        """Test that the console handler writes to stderr at the given level."""
        setup_logging("WARNING")
        handlers = logging.getLogger().handlers
        assert len(handlers) == 1
        assert handlers[0].stream is sys.stderr
        assert handlers[0].level == logging.WARNING

    def test_log_file(self, temp_dir):
        """Test that a log file receives debug messages."""
        log_file = temp_dir / "logs" / "free-links.log"
        setup_logging("ERROR", log_file)
        get_logger("free_links.test").debug("frontier size 3")
        for handler in logging.getLogger().handlers:
            handler.flush()
        assert "frontier size 3" in log_file.read_text()

    def test_unwritable_log_file(self, temp_dir):
        """Test that an unusable log file falls back to the console."""
        blocker = temp_dir / "blocker"
        blocker.write_text("")
        setup_logging("INFO", blocker / "free-links.log")
        assert len(logging.getLogger().handlers) == 1
