"""Access to data files bundled with the package."""

from importlib import resources
from pathlib import Path


def data_path(name: str) -> Path:
    """Return the filesystem path of a bundled data file."""
    return Path(resources.files("spellspot").joinpath("data", name))
