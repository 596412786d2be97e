"""Tests for ErrorMessages."""

from dirac_landau_verify.components.error_messages import ErrorMessages
from dirac_landau_verify.components.errors import ConfigError


class TestErrorMessages:
    """Test message formatting."""

    def test_config_error_with_file(self):
        """Test the file path is shown and listed first."""
        message = ErrorMessages.config_error(ConfigError("bad seed"), "/tmp/x.yaml")
        assert "File: /tmp/x.yaml" in message
        assert "bad seed" in message
        assert '1. Check the file parses as YAML: "/tmp/x.yaml"' in message

    def test_config_error_without_file(self):
        """Test the message works without a path."""
        message = ErrorMessages.config_error(ConfigError("bad seed"))
        assert "File:" not in message
        assert "1. Check the suite section" in message

    def test_unknown_suite(self):
        """Test available suites are listed."""
        message = ErrorMessages.unknown_suite("gravity", ["weyl", "tkk"])
        assert '"gravity"' in message
        assert "weyl, tkk" in message

    def test_checks_failed_truncates(self):
        """Test long failure lists are cut at ten entries."""
        ids = [f"weyl.check{i}" for i in range(13)]
        message = ErrorMessages.checks_failed(ids, 40)
        assert message.startswith("13 of 40 checks failed")
        assert "weyl.check9" in message
        assert "weyl.check10" not in message
        assert "and 3 more" in message

    def test_unexpected_error(self):
        """Test the exception type and text appear."""
        message = ErrorMessages.unexpected_error("suite tkk", ValueError("boom"))
        assert "suite tkk raised ValueError" in message
        assert "boom" in message
