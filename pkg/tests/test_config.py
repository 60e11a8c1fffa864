"""Tests for configuration loading."""

import pytest

from free_links.config import load_config


class TestLoadConfig:
    """Test cases for load_config."""

    def test_defaults(self):
        """Test that every setting has a default."""
        config = load_config()
        assert config.log_level == "INFO"
        assert config.log_file is None
        assert config.max_smoothing_crossings == 20
        assert config.search_max_crossings == 8
        assert config.bfs_max_crossings == 6
        assert config.bfs_max_depth == 5

    def test_environment(self, monkeypatch):
        """Test reading FREE_LINKS_ variables."""
        monkeypatch.setenv("FREE_LINKS_LOG_LEVEL", "debug")
        monkeypatch.setenv("FREE_LINKS_BFS_MAX_DEPTH", "3")
        config = load_config()
        assert config.log_level == "DEBUG"
        assert config.bfs_max_depth == 3

    def test_env_file(self, temp_dir):
        """Test reading an explicit .env file."""
        env_file = temp_dir / "custom.env"
        env_file.write_text("FREE_LINKS_MAX_SMOOTHING_CROSSINGS=12\nOTHER_TOOL_KEY=ignored\n")
        assert load_config(env_file).max_smoothing_crossings == 12

    def test_dotenv_in_working_directory(self, temp_dir):
        """Test that a .env in the working directory is picked up."""
        (temp_dir / ".env").write_text("FREE_LINKS_EXAMPLES_SEARCH_CROSSINGS=4\n")
        assert load_config().examples_search_crossings == 4

    def test_missing_env_file(self, temp_dir):
        """Test an explicit file that does not exist."""
        with pytest.raises(FileNotFoundError) as exc_info:
            load_config(temp_dir / "missing.env")
        assert "FREE_LINKS_" in str(exc_info.value)

    @pytest.mark.parametrize(
        "key, value",
        [
            ("FREE_LINKS_LOG_LEVEL", "LOUD"),
            ("FREE_LINKS_MAX_SMOOTHING_CROSSINGS", "30"),
            ("FREE_LINKS_SEARCH_MAX_CROSSINGS", "9"),
            ("FREE_LINKS_BFS_MAX_DEPTH", "deep"),
        ],
    )
    def test_invalid_values(self, monkeypatch, key, value):
        """Test that invalid values raise ValueError."""
        monkeypatch.setenv(key, value)
        with pytest.raises(ValueError):
            load_config()
