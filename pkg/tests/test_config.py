from ffh.config import Config, get_bool_env, get_int_env, load_env_file


def test_defaults(monkeypatch):
    for key in ("FFH_QUAD_ORDER", "FFH_FD_STEP", "FFH_TOL", "FFH_LOG_LEVEL"):
        monkeypatch.delenv(key, raising=False)
    settings = Config()
    assert (settings.QUAD_ORDER, settings.FD_STEP, settings.TOL) == (64, 1e-3, 1e-6)
    assert settings.EXAMPLE_QUAD_ORDER == 512
    assert (settings.ORACLE_POLAR, settings.ORACLE_AZIMUTH) == (64, 128)
    assert settings.LOG_LEVEL == "WARNING"


def test_environment_is_read_per_instance(monkeypatch):
    monkeypatch.setenv("FFH_QUAD_ORDER", "128")
    monkeypatch.setenv("FFH_LOG_LEVEL", "debug")
    settings = Config()
    assert settings.QUAD_ORDER == 128
    assert settings.EXAMPLE_QUAD_ORDER == 128
    assert settings.LOG_LEVEL == "DEBUG"


def test_malformed_numbers_fall_back(monkeypatch):
    monkeypatch.setenv("FFH_QUAD_ORDER", "many")
    assert get_int_env("FFH_QUAD_ORDER", 64) == 64


def test_bool_env(monkeypatch):
    monkeypatch.setenv("API_RELOAD", "Yes")
    assert get_bool_env("API_RELOAD") is True
    monkeypatch.setenv("API_RELOAD", "0")
    assert get_bool_env("API_RELOAD") is False


def test_env_file(tmp_path, monkeypatch):
    monkeypatch.delenv("FFH_TOL", raising=False)
    env = tmp_path / ".env"
    env.write_text("FFH_TOL=1e-9\n")
    assert load_env_file(env)
    assert Config().TOL == 1e-9
    monkeypatch.delenv("FFH_TOL")
    assert not load_env_file(tmp_path / "missing.env")
