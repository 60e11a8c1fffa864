"""Configuration management for free links CLI."""

from pathlib import Path
from typing import Optional

from pydantic import Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from .models import Config as ConfigModel


class Config(BaseSettings):
    """Application configuration loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="FREE_LINKS_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    log_level: str = Field("INFO", description="Console log level")
    log_file: Optional[Path] = Field(None, description="Optional DEBUG log file")
    max_smoothing_crossings: int = Field(
        20, description="Largest number of even crossings a bracket will expand"
    )
    search_max_crossings: int = Field(8, description="Upper bound for long example searches")
    examples_search_crossings: int = Field(
        6, description="Crossing bound used by the examples command"
    )
    bfs_max_crossings: int = Field(6, description="Default crossing bound for bfs")
    bfs_max_depth: int = Field(5, description="Default move depth for bfs")

    def to_model(self) -> ConfigModel:
        """Convert to Config model for validation."""
        return ConfigModel(
            log_level=self.log_level,
            log_file=self.log_file,
            max_smoothing_crossings=self.max_smoothing_crossings,
            search_max_crossings=self.search_max_crossings,
            examples_search_crossings=self.examples_search_crossings,
            bfs_max_crossings=self.bfs_max_crossings,
            bfs_max_depth=self.bfs_max_depth,
        )


def load_config(env_file: Optional[Path] = None) -> ConfigModel:
    """
    Load configuration from environment variables or .env file.

    Every setting has a default, so a missing .env file is fine unless one
    was named explicitly.

    Args:
        env_file: Optional path to .env file. If None, the current directory's
            .env is used when present.

    Returns:
        Validated Config model instance

    Raises:
        FileNotFoundError: If .env file is specified but doesn't exist
        ValueError: If a variable holds an invalid value
    """
    if env_file is not None and not env_file.exists():
        raise FileNotFoundError(
            f"Configuration file not found: {env_file}\n"
            "Variables use the FREE_LINKS_ prefix, e.g. FREE_LINKS_LOG_LEVEL=DEBUG.\n"
            "See .env.example for a template."
        )

    try:
        if env_file is not None:
            config = Config(_env_file=str(env_file))
        else:
            config = Config()
        return config.to_model()
    except ValidationError as e:
        raise ValueError(f"Invalid configuration: {e}") from e
