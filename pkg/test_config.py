"""
Tests for configuration loading
"""
import yaml

from config import Config


def test_yaml_file_overrides(tmp_path, restore_config):
    path = tmp_path / "genosc.yaml"
    path.write_text(yaml.safe_dump({'max_dim': 128, 'tail_tol': 1e-10, 'no_such_key': 1}))
    assert Config.load_from_file(str(path))
    assert Config.MAX_DIM == 128
    assert Config.TAIL_TOL == 1e-10
    assert not hasattr(Config, 'NO_SUCH_KEY')


def test_missing_file_is_not_an_error(tmp_path):
    assert not Config.load_from_file(str(tmp_path / "absent.yaml"))


def test_environment_overrides(monkeypatch, restore_config):
    monkeypatch.setenv("OSC_MAX_DIM", "96")
    monkeypatch.setenv("OSC_WORKERS", "0")
    monkeypatch.setenv("OSC_VERBOSE", "yes")
    monkeypatch.setenv("NO_COLOR", "1")
    Config.load_from_env()
    assert Config.MAX_DIM == 96
    assert Config.WORKERS == 1
    assert Config.VERBOSE_LOGGING is True
    assert Config.USE_COLOR is False


def test_non_integer_environment_value_is_ignored(monkeypatch, restore_config):
    monkeypatch.setenv("OSC_MAX_DIM", "lots")
    before = Config.MAX_DIM
    Config.load_from_env()
    assert Config.MAX_DIM == before


def test_save_round_trip(tmp_path, restore_config):
    path = Config.save_to_file(str(tmp_path / "saved.yaml"))
    data = yaml.safe_load(path.read_text())
    assert data == Config.to_dict()
