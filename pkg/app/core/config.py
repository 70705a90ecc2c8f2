# app/core/config.py

import os
import sys
from typing import Any, ClassVar, Literal, Set

from pydantic_settings import BaseSettings, SettingsConfigDict
from dotenv import load_dotenv


# --------------------------------------------------
# Load .env ONLY for non-production environments
# --------------------------------------------------
if os.getenv("FASTHAAR_ENVIRONMENT") != "production":
    load_dotenv()


AppEnvironment = Literal["development", "test", "staging", "production"]


class Settings(BaseSettings):
    """
    Central configuration for the FastHaar engine and its command line.
    Every field has a default; FASTHAAR_* variables or a .env file override them.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="FASTHAAR_",
        extra="ignore",
        case_sensitive=True,
    )

    # --------------------------------------------------
    # 1. Environment & Project Info
    # --------------------------------------------------
    PROJECT_NAME: str = "FastHaar"
    APP_VERSION: str = "1.0.0"
    ENVIRONMENT: AppEnvironment = "development"
    LOG_LEVEL: str = "WARNING"

    # ---- CONSTANTS (NOT ENV FIELDS) ----
    VALID_LOG_LEVELS: ClassVar[Set[str]] = {
        "DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL",
    }
    # 17 significant digits round-trip every IEEE double exactly
    CSV_SIGNIFICANT_DIGITS: ClassVar[int] = 17

    # --------------------------------------------------
    # 2. Generated inputs
    # --------------------------------------------------
    DEFAULT_SEED: int = 42
    DEFAULT_SIGNAL_LENGTH: int = 1024
    DEFAULT_IMAGE_SIZE: int = 64

    # --------------------------------------------------
    # 3. Acceptance thresholds
    # --------------------------------------------------
    ROUNDTRIP_TOLERANCE: float = 1e-9
    COMPARE_THRESHOLD_DB: float = -90.0
    ERROR_FLOOR_DB: float = -300.0

    # --------------------------------------------------
    # 4. Benchmarking & display
    # --------------------------------------------------
    BENCH_REPEATS: int = 11
    DIFFERENCE_DISPLAY_GAIN: float = 1e14

    # --------------------------------------------------
    # 5. Final Hard Validation (Fail Fast)
    # --------------------------------------------------
    def model_post_init(self, __context: Any) -> None:
        """Fail fast on values that would make every command meaningless."""

        if self.LOG_LEVEL not in self.VALID_LOG_LEVELS:
            sys.exit(f"❌ Invalid LOG_LEVEL: {self.LOG_LEVEL}")

        if self.BENCH_REPEATS < 1:
            sys.exit(f"❌ BENCH_REPEATS must be >= 1, got {self.BENCH_REPEATS}")

        if self.COMPARE_THRESHOLD_DB > 0 or self.ERROR_FLOOR_DB > 0:
            sys.exit("❌ dB thresholds must be <= 0")

        if self.ERROR_FLOOR_DB > self.COMPARE_THRESHOLD_DB:
            sys.exit("❌ ERROR_FLOOR_DB must lie below COMPARE_THRESHOLD_DB")

        if self.DEFAULT_SIGNAL_LENGTH < 2 or self.DEFAULT_IMAGE_SIZE < 2:
            sys.exit("❌ Default signal length and image size must be >= 2")


# Singleton
settings = Settings()
