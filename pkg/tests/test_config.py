import pytest

from surgery.config import Config


def test_defaults_are_valid():
    assert Config.validate()


def test_override_skips_none():
    seed = Config.SEED
    Config.override(SEED=None, MAX_COSETS=50)
    assert Config.SEED == seed
    assert Config.MAX_COSETS == 50


@pytest.mark.parametrize("values", [
    {"MAX_COSETS": 0},
    {"LEVEL_TOL": 2.0},
    {"SEED": -1},
    {"LOG_LEVEL": "LOUD"},
    {"NOT_AN_ATTRIBUTE": 1},
])
def test_invalid_overrides(values):
    with pytest.raises(ValueError):
        Config.override(**values)


def test_load_file(tmp_path):
    path = tmp_path / "surgery.env"
    path.write_text("SURGERY_SEED=7\nSURGERY_LEVEL_TOL=1e-10\nSURGERY_LOG_LEVEL=debug\n")
    assert Config.load_file(str(path)) == {"SEED": 7, "LEVEL_TOL": 1e-10, "LOG_LEVEL": "DEBUG"}
    assert Config.SEED == 7
    assert Config.LOG_LEVEL == "DEBUG"


@pytest.mark.parametrize("content", ["SURGERY_COLOUR=blue\n", "SURGERY_MAX_COSETS=many\n"])
def test_bad_config_files(tmp_path, content):
    path = tmp_path / "surgery.env"
    path.write_text(content)
    with pytest.raises(ValueError):
        Config.load_file(str(path))


def test_missing_config_file(tmp_path):
    with pytest.raises(ValueError):
        Config.load_file(str(tmp_path / "absent.env"))


def test_snapshot_covers_every_key():
    assert set(Config.snapshot()) == {attribute for attribute, _ in Config.KEYS.values()}
