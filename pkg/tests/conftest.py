import json
import pathlib

import pytest

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture
def fixture_path():
    def path(name: str) -> str:
        return str(FIXTURES / name)

    return path


@pytest.fixture
def fixture_doc():
    def load(name: str) -> dict:
        with open(FIXTURES / name, encoding="utf-8") as fh:
            return json.load(fh)

    return load
