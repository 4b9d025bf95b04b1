"""
配置测试
"""

from pathlib import Path

import pytest

from src.config.external_loader import ExternalConfigLoader
from src.config.settings import Settings


def test_env_overrides(monkeypatch, tmp_path):
    monkeypatch.setenv("P1F_THREADS", "3")
    monkeypatch.setenv("P1F_DEBUG", "yes")
    monkeypatch.setenv("P1F_LOG_LEVEL", "debug")
    monkeypatch.setenv("P1F_CATALOGUE_DIR", str(tmp_path / "cat"))
    settings = Settings()
    assert settings.threads == 3
    assert settings.is_debug is True
    assert settings.log_level == "DEBUG"
    assert settings.get_catalogue_path() == tmp_path / "cat"


def test_relative_paths_use_project_root(monkeypatch):
    monkeypatch.setenv("P1F_CATALOGUE_DIR", "data/catalogue")
    settings = Settings()
    assert settings.get_catalogue_path() == settings.BASE_DIR / "data" / "catalogue"
    assert (settings.BASE_DIR / "main.py").exists()


@pytest.mark.parametrize("name, value", [
    ("P1F_THREADS", "0"),
    ("P1F_LOG_LEVEL", "VERBOSE"),
    ("P1F_API_PORT", "70000"),
    ("P1F_THREADS", "many"),
])
def test_invalid_values(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ValueError):
        Settings()


def test_external_config(monkeypatch, tmp_path):
    (tmp_path / "p1f_plugin.py").write_text(
        "THREADS = 2\nLOG_LEVEL = 'WARNING'\nSEED_LIMIT = 5\nhelper = 1\n", encoding="utf-8")
    monkeypatch.setenv("P1F_CONFIG_PATH", str(tmp_path))
    loader = ExternalConfigLoader()
    config = loader.load_config()
    assert config == {"THREADS": 2, "LOG_LEVEL": "WARNING"}
    assert loader.find_config_file() == Path(tmp_path) / "p1f_plugin.py"


def test_external_config_missing(monkeypatch, tmp_path):
    monkeypatch.setenv("P1F_CONFIG_PATH", str(tmp_path))
    loader = ExternalConfigLoader()
    loader.config_paths = [str(tmp_path)]
    with pytest.raises(FileNotFoundError):
        loader.load_config()


def test_p_vector_max_i_covers_pv4():
    with pytest.raises(ValueError):
        Settings(p_vector_max_i=3)
    assert Settings(p_vector_max_i=4).p_vector_max_i == 4
