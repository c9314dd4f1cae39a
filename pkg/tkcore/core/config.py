from pathlib import Path
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Execution
    THREADS: int = 1

    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"

    # General Configuration
    PROJECT_NAME: str = "tkcore"
    DATASET_DIR: Path | None = None

    model_config = SettingsConfigDict(
        env_prefix="TKC_",
        env_file=".env",
        extra="ignore"
    )


settings = Settings()
