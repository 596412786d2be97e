"""Pytest configuration and fixtures."""

import sys
from pathlib import Path

import pytest

# Add src directory to Python path for imports
src_path = Path(__file__).parent.parent / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

from dirac_landau_verify.verify_config import SuiteConfig  # noqa: E402


@pytest.fixture
def isolated_home(tmp_path, monkeypatch):
    """Redirect home and cwd to empty temporary directories."""
    home = tmp_path / "home"
    cwd = tmp_path / "cwd"
    home.mkdir()
    cwd.mkdir()
    monkeypatch.setattr(Path, "home", lambda: home)
    monkeypatch.setattr(Path, "cwd", lambda: cwd)
    monkeypatch.delenv("DIRAC_VERIFY_CONFIG", raising=False)
    return home


@pytest.fixture
def temp_config_file(tmp_path):
    """Create a temporary config file."""
    config_file = tmp_path / ".diracrc"
    config_file.write_text(
        """
suite:
  seed: 7
  trials: 4
  ks_mode: paper-literal

landau:
  field_gauss: 20000.0
"""
    )
    return config_file


@pytest.fixture
def small_settings():
    """Suite settings small enough for unit tests."""
    return SuiteConfig(
        seed=42,
        trials=4,
        fock_cutoff_2mode=6,
        fock_cutoff_4mode=3,
        workers=2,
    )
