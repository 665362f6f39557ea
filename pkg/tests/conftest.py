import json
from pathlib import Path

import pytest

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
FIXTURE_NAMES = ("sample_01", "sample_02", "sample_03")


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def fixture_texts() -> dict[str, str]:
    return {name: (FIXTURES / f"{name}.txt").read_text(encoding="utf-8")
            for name in FIXTURE_NAMES}


@pytest.fixture(scope="session")
def fixture_expected() -> dict[str, dict]:
    return {name: json.loads((FIXTURES / f"{name}.expected.json").read_text())
            for name in FIXTURE_NAMES}
