import pytest

from app.core.config import Settings, settings


def test_defaults():
    fresh = Settings(_env_file=None)
    assert fresh.PROJECT_NAME == "FastHaar"
    assert fresh.DEFAULT_SEED == 42
    assert fresh.ROUNDTRIP_TOLERANCE == 1e-9
    assert fresh.COMPARE_THRESHOLD_DB == -90.0
    assert fresh.ERROR_FLOOR_DB == -300.0
    assert Settings.CSV_SIGNIFICANT_DIGITS == 17


def test_test_environment_is_active():
    assert settings.ENVIRONMENT == "test"


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("FASTHAAR_BENCH_REPEATS", "3")
    monkeypatch.setenv("FASTHAAR_DEFAULT_IMAGE_SIZE", "32")
    fresh = Settings(_env_file=None)
    assert (fresh.BENCH_REPEATS, fresh.DEFAULT_IMAGE_SIZE) == (3, 32)


@pytest.mark.parametrize(
    "name, value",
    [
        ("FASTHAAR_LOG_LEVEL", "LOUD"),
        ("FASTHAAR_BENCH_REPEATS", "0"),
        ("FASTHAAR_COMPARE_THRESHOLD_DB", "10"),
        ("FASTHAAR_ERROR_FLOOR_DB", "-10"),
    ],
)
def test_invalid_values_fail_fast(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(SystemExit):
        Settings(_env_file=None)


def test_no_unused_environment_flags():
    assert "IS_DEV" not in Settings.model_fields
    assert not hasattr(settings, "IS_TEST")
