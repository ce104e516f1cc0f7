"""
Unit tests for configuration classes
"""

import pytest

from upex import DpConfig, DrawConfig, GeneratorConfig, OracleConfig, StConfig, TransformConfig
from upex.config import ORACLE_CAP_ENV


class TestOracleConfig:
    """Test OracleConfig"""

    def test_defaults(self):
        """Test default configuration"""
        config = OracleConfig()
        assert config.max_vertices == 7
        assert config.materialize

    def test_invalid_cap(self):
        """Test the cap must be positive"""
        with pytest.raises(ValueError, match="max_vertices"):
            OracleConfig(max_vertices=0)

    def test_from_env(self, monkeypatch):
        """Test the cap is read from the environment"""
        monkeypatch.setenv(ORACLE_CAP_ENV, "5")
        config = OracleConfig.from_env(materialize=False)
        assert config.max_vertices == 5
        assert not config.materialize

    @pytest.mark.parametrize("raw", [None, "", "  "])
    def test_from_env_unset(self, monkeypatch, raw):
        """Test an unset or blank variable keeps the default"""
        if raw is None:
            monkeypatch.delenv(ORACLE_CAP_ENV, raising=False)
        else:
            monkeypatch.setenv(ORACLE_CAP_ENV, raw)
        assert OracleConfig.from_env().max_vertices == 7

    def test_from_env_invalid(self, monkeypatch):
        """Test a non-integer variable is rejected by name"""
        monkeypatch.setenv(ORACLE_CAP_ENV, "seven")
        with pytest.raises(ValueError, match=ORACLE_CAP_ENV):
            OracleConfig.from_env()


class TestSmallConfigs:
    """Test TransformConfig, DpConfig and StConfig"""

    def test_transform_defaults(self):
        """Test the fast sweep is the default"""
        config = TransformConfig()
        assert config.fast_sweep
        assert config.check_postconditions

    def test_dp_defaults(self):
        """Test the table cap and witness default"""
        config = DpConfig()
        assert config.max_n == 256
        assert config.keep_witness

    def test_dp_invalid(self):
        """Test the table needs at least an edge"""
        with pytest.raises(ValueError):
            DpConfig(max_n=1)

    def test_st_defaults(self):
        """Test the embedding check is on by default"""
        assert StConfig().check_embedding


class TestGeneratorConfig:
    """Test GeneratorConfig validation"""

    def test_defaults(self):
        """Test default configuration"""
        config = GeneratorConfig()
        assert config.kind == "st"
        assert config.n == 10
        assert config.pin_fraction == 1.0
        assert config.embedded
        assert not config.adversarial

    @pytest.mark.parametrize("kwargs", [
        {"kind": "tree"},
        {"n": 1},
        {"kind": "cycle", "n": 2},
        {"pin_fraction": 1.5},
        {"pin_fraction": -0.1},
        {"chord_rate": 1.0},
    ])
    def test_invalid(self, kwargs):
        """Test invalid settings are rejected"""
        with pytest.raises(ValueError):
            GeneratorConfig(**kwargs)


class TestDrawConfig:
    """Test DrawConfig validation"""

    def test_defaults(self):
        """Test default configuration"""
        config = DrawConfig()
        assert (config.viewport, config.radius, config.margin, config.title) == (1000, 6, 40, None)

    @pytest.mark.parametrize("kwargs", [
        {"viewport": 0},
        {"margin": -1},
        {"viewport": 100, "margin": 50},
        {"radius": 0},
    ])
    def test_invalid(self, kwargs):
        """Test invalid settings are rejected"""
        with pytest.raises(ValueError):
            DrawConfig(**kwargs)
