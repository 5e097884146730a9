"""Reads space and endomorphism description files

Space files hold exactly one of:
    {"complex": {"vertices": [...], "facets": [[...], ...]}}
    {"profile": {"0": ["1"], "3": ["x_3"]}}
    {"builtin": "sphere", "params": [3]}
An optional "name" key labels the space.

Endomorphism files hold {"degree_blocks": {"3": [[2]]}}
"""

import json
from pathlib import Path
from typing import Any

from ctrace.shared import SpaceFileParseError, ctrace_logger

from .builtin_spaces import builtin_space
from .cohomology_endomorphism import CohomologyEndomorphism
from .cohomology_profile import CohomologyProfile
from .simplicial_complex import SimplicialComplex

SPACE_KEYS: tuple[str, ...] = ("complex", "profile", "builtin")


def read_json(source: Path | str | dict[str, Any]) -> dict[str, Any]:
    """Loads a JSON object from a path, or passes a dict through"""

    if isinstance(source, dict):
        return source
    path = Path(source)
    try:
        json_obj = json.loads(path.read_text())
    except OSError as e:
        raise SpaceFileParseError(f"Can't read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise SpaceFileParseError(f"{path} is not valid JSON: {e}") from e
    if not isinstance(json_obj, dict):
        raise SpaceFileParseError(f"{path} must hold a JSON object")
    return json_obj


def load_complex(source: Path | str | dict[str, Any]) -> SimplicialComplex | None:
    """The complex of a space file, or None for profile/builtin files"""

    json_obj = read_json(source)
    if "complex" not in json_obj:
        return None
    return SimplicialComplex.from_json(
        json_obj["complex"], name=json_obj.get("name", "K")
    )


def load_space(source: Path | str | dict[str, Any]) -> CohomologyProfile:
    """Cohomology profile described by a space file"""

    json_obj = read_json(source)
    present = [key for key in SPACE_KEYS if key in json_obj]
    if len(present) != 1:
        raise SpaceFileParseError(
            f"A space file needs exactly one of {list(SPACE_KEYS)}, found {present}"
        )

    key = present[0]
    if key == "complex":
        complex_ = load_complex(json_obj)
        assert complex_ is not None
        ctrace_logger.debug(f"Computing cohomology of {complex_}")
        return complex_.cohomology()
    elif key == "profile":
        return CohomologyProfile.from_json(
            json_obj["profile"], space_name=json_obj.get("name", "X")
        )
    else:
        params = json_obj.get("params", [])
        if not isinstance(params, list):
            raise SpaceFileParseError("builtin params must be a list")
        return builtin_space(json_obj["builtin"], params)


def load_endomorphism(
    source: Path | str | dict[str, Any], profile: CohomologyProfile
) -> CohomologyEndomorphism:
    return CohomologyEndomorphism.from_json(read_json(source), profile)
