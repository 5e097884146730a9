from collections.abc import Mapping, Sequence
from functools import reduce
from typing import Any

from ctrace.shared import UNIT_LABEL, BuiltinSpaces, UnknownBuiltinSpaceError

from .cohomology_profile import CohomologyProfile, kunneth


class BuiltinSpaceFactory:
    """Spaces whose rational cohomology is known without a triangulation"""

    @staticmethod
    def point() -> CohomologyProfile:
        return CohomologyProfile({0: [UNIT_LABEL]}, space_name="pt")

    @staticmethod
    def sphere(k: int) -> CohomologyProfile:
        return CohomologyProfile({0: [UNIT_LABEL], k: [f"x_{k}"]}, space_name=f"S^{k}")

    @staticmethod
    def cp(m: int) -> CohomologyProfile:
        """Truncated polynomial algebra on c in degree 2 (labels only)"""

        def label(i: int) -> str:
            return {0: UNIT_LABEL, 1: "c"}.get(i, f"c^{i}")

        return CohomologyProfile(
            {2 * i: [label(i)] for i in range(m + 1)}, space_name=f"CP^{m}"
        )

    @staticmethod
    def torus(d: int) -> CohomologyProfile:
        circles = [BuiltinSpaceFactory.sphere(1)] * d
        torus = reduce(kunneth, circles)
        return CohomologyProfile(torus.entries, space_name=f"T^{d}")

    @staticmethod
    def product(a: CohomologyProfile, b: CohomologyProfile) -> CohomologyProfile:
        return kunneth(a, b)


def _positive_int(name: str, value: Any) -> int:
    if isinstance(value, bool):
        raise UnknownBuiltinSpaceError(f"{name} expects an int, got {value!r}")
    try:
        parsed = int(value)
    except (TypeError, ValueError) as e:
        raise UnknownBuiltinSpaceError(f"{name} expects an int, got {value!r}") from e
    if parsed < 1 or str(parsed) != str(value).strip():
        raise UnknownBuiltinSpaceError(f"{name} expects an int >= 1, got {value!r}")
    return parsed


def _factor(value: Any) -> CohomologyProfile:
    """A product factor: a profile, {"builtin": ..., "params": ...} or "name:p,q" """

    if isinstance(value, CohomologyProfile):
        return value
    if isinstance(value, Mapping) and "builtin" in value:
        return builtin_space(value["builtin"], value.get("params", ()))
    if isinstance(value, str):
        name, _, raw_params = value.partition(":")
        params = [p for p in raw_params.split(",") if p]
        return builtin_space(name, params)
    raise UnknownBuiltinSpaceError(f"Can't read product factor {value!r}")


def builtin_space(name: str, params: Sequence[Any] = ()) -> CohomologyProfile:
    """Profile of a builtin space

    point, sphere(k >= 1), cp(m >= 1), torus(d >= 1), product(a, b)
    """

    try:
        kind = BuiltinSpaces(str(name).lower())
    except ValueError as e:
        valid = ", ".join(x.value for x in BuiltinSpaces)
        raise UnknownBuiltinSpaceError(
            f"Unknown builtin space {name!r}, expected one of {valid}"
        ) from e

    params = list(params)
    expected = {
        BuiltinSpaces.POINT: 0,
        BuiltinSpaces.SPHERE: 1,
        BuiltinSpaces.CP: 1,
        BuiltinSpaces.TORUS: 1,
        BuiltinSpaces.PRODUCT: 2,
    }[kind]
    if len(params) != expected:
        raise UnknownBuiltinSpaceError(
            f"{kind.value} takes {expected} parameter(s), got {len(params)}"
        )

    if kind == BuiltinSpaces.POINT:
        return BuiltinSpaceFactory.point()
    elif kind == BuiltinSpaces.SPHERE:
        return BuiltinSpaceFactory.sphere(_positive_int("sphere", params[0]))
    elif kind == BuiltinSpaces.CP:
        return BuiltinSpaceFactory.cp(_positive_int("cp", params[0]))
    elif kind == BuiltinSpaces.TORUS:
        return BuiltinSpaceFactory.torus(_positive_int("torus", params[0]))
    elif kind == BuiltinSpaces.PRODUCT:
        return BuiltinSpaceFactory.product(_factor(params[0]), _factor(params[1]))
    else:  # pragma: no cover
        raise NotImplementedError(kind)
