"""Tests for VerifyConfig and SuiteConfig."""

import pytest

from dirac_landau_verify.components.errors import ConfigError
from dirac_landau_verify.verify_config import (
    CONFIG_ENV_VAR,
    CONFIG_FILENAME,
    SUITE_NAMES,
    SuiteConfig,
    VerifyConfig,
    get_config,
    initialize_default_config,
)


class TestVerifyConfigLoading:
    """Test hierarchical configuration loading."""

    def test_defaults_loaded(self, isolated_home):
        """Test built-in defaults apply without any file."""
        config = VerifyConfig()

        assert config.get("suite.seed") == 42
        assert config.get("suite.ks_mode") == "hopf-normalized"
        assert config.get("landau.field_gauss") == 1.0e5
        assert config.get("report.colors.fail") == "bold red"

    def test_load_explicit_config(self, isolated_home, temp_config_file):
        """Test an explicit file overrides defaults and keeps the rest."""
        config = VerifyConfig(temp_config_file)

        assert config.get("suite.seed") == 7
        assert config.get("suite.trials") == 4
        assert config.get("suite.ks_mode") == "paper-literal"
        assert config.get("suite.lc_momenta") == "as-printed"
        assert config.get("landau.field_gauss") == 2.0e4

    def test_nonexistent_config_uses_defaults(self, isolated_home, tmp_path):
        """Test a missing explicit path is ignored."""
        config = VerifyConfig(tmp_path / "missing.yaml")
        assert config.get("suite.trials") == 32

    def test_hierarchical_precedence(self, isolated_home, tmp_path, monkeypatch):
        """Test explicit > env var > project > global."""
        (isolated_home / CONFIG_FILENAME).write_text(
            "suite:\n  seed: 1\n  trials: 2\n  workers: 3\n  output: json\n"
        )
        project = tmp_path / "cwd" / CONFIG_FILENAME
        project.write_text("suite:\n  seed: 10\n  trials: 20\n  workers: 30\n")
        env_file = tmp_path / "env.yaml"
        env_file.write_text("suite:\n  seed: 100\n  trials: 200\n")
        monkeypatch.setenv(CONFIG_ENV_VAR, str(env_file))
        explicit = tmp_path / "explicit.yaml"
        explicit.write_text("suite:\n  seed: 1000\n")

        config = VerifyConfig(explicit)

        assert config.get("suite.seed") == 1000
        assert config.get("suite.trials") == 200
        assert config.get("suite.workers") == 30
        assert config.get("suite.output") == "json"

    def test_missing_env_file_warns(self, isolated_home, monkeypatch, caplog):
        """Test a dangling env var path logs a warning and uses defaults."""
        monkeypatch.setenv(CONFIG_ENV_VAR, "/nonexistent/dirac.yaml")
        config = VerifyConfig()
        assert config.get("suite.seed") == 42
        assert CONFIG_ENV_VAR in caplog.text

    def test_invalid_yaml_falls_back_to_defaults(self, isolated_home, tmp_path):
        """Test malformed YAML is skipped."""
        bad = tmp_path / "bad.yaml"
        bad.write_text("suite: [unclosed\n")
        config = VerifyConfig(bad)
        assert config.get("suite.seed") == 42

    def test_non_mapping_rejected(self, isolated_home, tmp_path):
        """Test a YAML list at top level is skipped."""
        bad = tmp_path / "list.yaml"
        bad.write_text("- 1\n- 2\n")
        assert VerifyConfig(bad).get("suite.seed") == 42

    def test_empty_config_file(self, isolated_home, tmp_path):
        """Test an empty file leaves defaults."""
        empty = tmp_path / "empty.yaml"
        empty.write_text("")
        assert VerifyConfig(empty).get("suite.trials") == 32

    def test_none_values_do_not_override(self, isolated_home, tmp_path):
        """Test null entries keep the default."""
        partial = tmp_path / "partial.yaml"
        partial.write_text("suite:\n  seed:\n  trials: 5\n")
        config = VerifyConfig(partial)
        assert config.get("suite.seed") == 42
        assert config.get("suite.trials") == 5


class TestVerifyConfigAccess:
    """Test get, set and section access."""

    def test_get_with_default(self, isolated_home):
        """Test missing keys return the default."""
        config = VerifyConfig()
        assert config.get("suite.missing", "fallback") == "fallback"
        assert config.get("nothing.here") is None

    def test_get_section_is_copy(self, isolated_home):
        """Test mutating a section does not touch the config."""
        config = VerifyConfig()
        section = config.get_section("suite")
        section["seed"] = -1
        assert config.get("suite.seed") == 42

    def test_set_creates_nested_keys(self, isolated_home):
        """Test set builds intermediate mappings."""
        config = VerifyConfig()
        config.set("extra.deep.value", 3)
        assert config.get("extra.deep.value") == 3

    def test_expand_path(self, isolated_home, monkeypatch):
        """Test ~ and $VAR are expanded."""
        monkeypatch.setenv("DIRAC_TEST_DIR", "/tmp/dirac")
        config = VerifyConfig()
        assert str(config.expand_path("$DIRAC_TEST_DIR/logs")) == "/tmp/dirac/logs"
        assert "~" not in str(config.expand_path("~/logs"))


class TestSuiteConfig:
    """Test validated suite settings."""

    def test_from_defaults(self, isolated_home):
        """Test the default section validates."""
        settings = VerifyConfig().suite_config()
        assert settings.seed == 42
        assert settings.suites == SUITE_NAMES

    def test_suite_selection(self, isolated_home):
        """Test selecting a subset of suites."""
        settings = VerifyConfig().suite_config(["jordan", "tkk"])
        assert settings.suites == ("jordan", "tkk")

    def test_unknown_suite(self):
        """Test unknown suite names raise ConfigError."""
        with pytest.raises(ConfigError):
            SuiteConfig(suites=("weyl", "gravity"))

    @pytest.mark.parametrize(
        "overrides",
        [
            {"trials": 0},
            {"trials": True},
            {"seed": 1.5},
            {"workers": -2},
            {"fock_cutoff_2mode": 1},
            {"tolerance_numeric": 0.0},
            {"ks_mode": "halved"},
            {"lc_momenta": "rescaled"},
            {"output": "xml"},
        ],
    )
    def test_invalid_values(self, overrides):
        """Test invalid values raise ConfigError."""
        with pytest.raises(ConfigError):
            SuiteConfig(**overrides)

    def test_string_tolerance_coerced(self):
        """Test YAML strings like '1e-6' become floats."""
        settings = SuiteConfig.from_section({"tolerance_eigen": "1e-6"})
        assert settings.tolerance_eigen == 1e-6

    def test_bad_tolerance(self):
        """Test a non-numeric tolerance raises ConfigError."""
        with pytest.raises(ConfigError):
            SuiteConfig.from_section({"tolerance_numeric": "tiny"})

    def test_unknown_keys_ignored(self, caplog):
        """Test unknown keys are logged and dropped."""
        settings = SuiteConfig.from_section({"seed": 3, "colour": "blue"})
        assert settings.seed == 3
        assert "colour" in caplog.text

    def test_invalid_file_value(self, isolated_home, tmp_path):
        """Test a bad value in a file surfaces when validating."""
        bad = tmp_path / "bad.yaml"
        bad.write_text("suite:\n  ks_mode: halved\n")
        with pytest.raises(ConfigError):
            VerifyConfig(bad).suite_config()

    def test_with_overrides(self, small_settings):
        """Test None overrides are skipped and the rest revalidated."""
        updated = small_settings.with_overrides(seed=9, trials=None)
        assert updated.seed == 9
        assert updated.trials == small_settings.trials
        with pytest.raises(ConfigError):
            small_settings.with_overrides(workers=0)

    def test_to_dict(self, small_settings):
        """Test the report header settings."""
        data = small_settings.to_dict()
        assert data["seed"] == 42
        assert data["suites"] == list(SUITE_NAMES)
        assert "workers" not in data


class TestGlobalConfig:
    """Test the lazily created global instance."""

    def test_initialize_default_config(self, isolated_home):
        """Test the default file is written once and parses."""
        path = initialize_default_config()
        assert path == isolated_home / CONFIG_FILENAME
        assert "ks_mode: hopf-normalized" in path.read_text()
        path.write_text("suite:\n  seed: 5\n")
        initialize_default_config()
        assert path.read_text() == "suite:\n  seed: 5\n"

    def test_default_file_matches_defaults(self, isolated_home):
        """Test loading the generated file gives the built-in values."""
        initialize_default_config()
        config = VerifyConfig()
        assert config.get_section("suite") == VerifyConfig.DEFAULTS["suite"]

    def test_get_config_reload(self, isolated_home, temp_config_file):
        """Test reload picks up an explicit path."""
        first = get_config(reload=True)
        assert get_config() is first
        reloaded = get_config(temp_config_file, reload=True)
        assert reloaded is not first
        assert reloaded.get("suite.seed") == 7
