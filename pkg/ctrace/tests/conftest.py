import json
from pathlib import Path

import pytest


@pytest.fixture(scope="session")
def overwrite(pytestconfig):
    return pytestconfig.getoption("overwrite")


@pytest.fixture
def write_json(tmp_path: Path):
    """Writes a JSON object to a temp file and returns its path"""

    def _write_json(name: str, json_obj) -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(json_obj))
        return path

    return _write_json


# https://stackoverflow.com/a/66597438/8903959
def pytest_addoption(parser):
    # Overwrite ground truth
    parser.addoption(
        "--overwrite",
        action="store_true",
        default=False,
        help="Overwrite the ground truths of the report tests",
    )
