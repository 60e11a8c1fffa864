"""Shared pytest fixtures for free-links-cli tests."""

import os
import tempfile
from pathlib import Path
from typing import Generator

import pytest
from hypothesis import HealthCheck, settings

from free_links.config import load_config
from free_links.gauss_code import parse_diagram
from free_links.invertibility import EXAMPLE_KNOT, EXAMPLE_LINK
from free_links.models import Config, Diagram

settings.register_profile(
    "full",
    max_examples=1000,
    deadline=None,
    suppress_health_check=[
        HealthCheck.too_slow,
        HealthCheck.filter_too_much,
        HealthCheck.function_scoped_fixture,
    ],
)
settings.register_profile(
    "quick",
    max_examples=60,
    deadline=None,
    suppress_health_check=[
        HealthCheck.too_slow,
        HealthCheck.filter_too_much,
        HealthCheck.function_scoped_fixture,
    ],
)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "full"))


@pytest.fixture
def temp_dir() -> Generator[Path, None, None]:
    """Create a temporary directory for tests."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch, temp_dir) -> None:
    """Run every test away from any developer .env and FREE_LINKS_ variables."""
    for key in list(os.environ):
        if key.startswith("FREE_LINKS_"):
            monkeypatch.delenv(key, raising=False)
    monkeypatch.chdir(temp_dir)


@pytest.fixture
def link() -> Diagram:
    """The built-in two-component link with an oriented first component."""
    return parse_diagram(EXAMPLE_LINK)


@pytest.fixture
def knot() -> Diagram:
    """The built-in knot whose chord 1 is linked with every other chord."""
    return parse_diagram(EXAMPLE_KNOT)


@pytest.fixture
def sample_config() -> Config:
    """Default configuration."""
    return load_config()


@pytest.fixture
def diagram_file(temp_dir) -> Path:
    """A diagram file with comments and blank lines before the code."""
    path = temp_dir / "link.txt"
    path.write_text("# two-component link\n\n" + EXAMPLE_LINK + "\n# trailing comment\n")
    return path
