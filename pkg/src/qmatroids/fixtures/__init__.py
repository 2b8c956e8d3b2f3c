"""Pinned JSON documents: worked examples, a spread of F_2^4, bound crossovers."""

import json
from importlib import resources

from ..io import from_json


def fixture_path(name: str):
    return resources.files(__name__).joinpath(name)


def load_fixture(name: str, raw: bool = False):
    """Load ``name`` (e.g. "uniform_2_4.json"); ``raw=True`` returns the plain dict."""
    data = json.loads(fixture_path(name).read_text(encoding="utf-8"))
    return data if raw else from_json(data)
