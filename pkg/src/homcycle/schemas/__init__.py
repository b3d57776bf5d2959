"""JSON schemas for the CLI outputs: ``result``, ``verify`` and ``index``."""

import json
from importlib import resources


def load_schema(name: str) -> dict:
    text = resources.files(__name__).joinpath(f"{name}.schema.json").read_text()
    return json.loads(text)
