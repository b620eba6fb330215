"""Access to the presentation files bundled with the package."""

from __future__ import annotations

import json
from importlib import resources

from .presentation import Presentation, parse_presentation


def bundled_names() -> list:
    """Names of the presentations shipped in the package data directory."""
    root = resources.files(__package__) / "data"
    return sorted(entry.name[:-5] for entry in root.iterdir()
                  if entry.name.endswith(".json"))


def load_bundled(name: str) -> Presentation:
    path = resources.files(__package__) / "data" / (name + ".json")
    return parse_presentation(json.loads(path.read_text(encoding="utf-8")))
