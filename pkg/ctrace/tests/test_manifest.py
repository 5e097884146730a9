import configparser
import tomllib
from pathlib import Path

ROOT = Path(__file__).parents[2]


def _requirement_names(lines: list[str]) -> set[str]:
    names = set()
    for raw in lines:
        line = raw.strip()
        if line and not line.startswith("#"):
            names.add(line.split("~")[0].split(">")[0].split("=")[0].strip())
    return names


class TestManifest:
    """Test environments install what the package and the suite import"""

    def test_tox_installs_test_requirements(self):
        tox = configparser.ConfigParser()
        tox.read(ROOT / "tox.ini")
        deps = tox["testenv"]["deps"]
        if "requirements_dev.txt" in deps:
            lines = (ROOT / "requirements_dev.txt").read_text().splitlines()
        else:
            lines = deps.splitlines()
        assert {"pytest", "hypothesis", "sympy", "frozendict"} <= _requirement_names(
            lines
        )

    def test_runtime_dependencies(self):
        pyproject = tomllib.loads((ROOT / "pyproject.toml").read_text())
        names = _requirement_names(pyproject["project"]["dependencies"])
        assert names == {"frozendict", "sympy"}
        test_names = _requirement_names(
            pyproject["project"]["optional-dependencies"]["test"]
        )
        assert {"pytest", "hypothesis"} <= test_names
