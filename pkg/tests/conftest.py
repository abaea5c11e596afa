from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixture_path():
    def get(name: str) -> Path:
        return FIXTURES / name

    return get


@pytest.fixture
def fixture_text(fixture_path):
    def get(name: str) -> str:
        return fixture_path(name).read_text(encoding="utf-8")

    return get
