import json
from typing import Any

from ctrace.qlinalg import QMatrix, format_rational
from ctrace.shared import TENSOR_SEPARATOR, Notes, is_unit_label

# Sections in rendering order; JSON keys are sorted regardless
SECTIONS: tuple[str, ...] = (
    "space",
    "n",
    "cohomology",
    "pi",
    "split",
    "k",
    "sigma",
    "endo",
    "notes",
)

BOLD = "\033[1m"
RESET = "\033[0m"


class Report:
    """Output of one CLI command

    Holds JSON-ready sections only, so a report parsed back from its own JSON
    renders byte for byte the same
    """

    __slots__ = ("sections",)

    def __init__(self, **sections: Any) -> None:
        unknown = set(sections) - set(SECTIONS)
        if unknown:
            raise ValueError(f"Unknown report sections {sorted(unknown)}")
        self.sections: dict[str, Any] = {
            key: sections[key] for key in SECTIONS if sections.get(key) is not None
        }
        self.sections.setdefault("notes", [])
        self._check_consistency()

    def _check_consistency(self) -> None:
        """sigma K-degrees are exactly the pi total degrees shifted by one"""

        if "pi" in self.sections and "sigma" in self.sections:
            pi_degrees = [block["total_degree"] + 1 for block in self.sections["pi"]]
            sigma_degrees = [row["k_degree"] for row in self.sections["sigma"]]
            assert pi_degrees == sigma_degrees, (pi_degrees, sigma_degrees)

    def __eq__(self, other) -> bool:
        if isinstance(other, Report):
            return self.sections == other.sections
        else:
            return NotImplemented

    def __getitem__(self, key: str) -> Any:
        return self.sections[key]

    def __contains__(self, key: object) -> bool:
        return key in self.sections

    ##############
    # JSON funcs #
    ##############

    def to_json(self) -> dict[str, Any]:
        return dict(self.sections)

    @classmethod
    def from_json(cls, json_obj: dict[str, Any]) -> "Report":
        return cls(**json_obj)

    def render_json(self) -> str:
        """Canonical JSON: sorted keys, two-space indent, trailing newline"""

        text = json.dumps(self.to_json(), indent=2, sort_keys=True, ensure_ascii=False)
        return text + "\n"

    ##########
    # Pretty #
    ##########

    def render_pretty(self, color: bool = False) -> str:
        lines: list[str] = []

        def header(text: str) -> None:
            lines.append(f"{BOLD}{text}{RESET}" if color else text)

        if "space" in self.sections:
            space = self.sections["space"]
            title = f"Space: {space['name']}"
            if "n" in self.sections:
                title += f"   n = {self.sections['n']}"
            if "k" in self.sections:
                dd = "trivial" if self.sections["k"]["dd_trivial"] else "nonzero"
                title += f"   dd = {dd}"
            header(title)
        if "cohomology" in self.sections:
            lines.extend(self._cohomology_lines(header))
        if "pi" in self.sections:
            header("pi_*((UA)∘)⊗Q by total degree")
            lines.extend(self._pi_lines(self.sections["pi"]))
        if "split" in self.sections:
            header("Based part (reduced cohomology)")
            lines.extend(self._pi_lines(self.sections["split"]["based"]))
            header("Free part (image of the constant-map section)")
            lines.extend(self._pi_lines(self.sections["split"]["free"]))
        if "k" in self.sections and "sigma" not in self.sections:
            lines.extend(self._k_lines(header))
        if "sigma" in self.sections:
            lines.extend(self._sigma_lines(header))
        if "endo" in self.sections:
            lines.extend(self._endo_lines(header))
        if self.sections["notes"]:
            header("Notes")
            lines.extend(f"  - {note}" for note in self.sections["notes"])
        return "\n".join(lines) + "\n"

    def _cohomology_lines(self, header) -> list[str]:
        cohomology = self.sections["cohomology"]
        header("Rational cohomology")
        lines = [f"  Betti numbers: {tuple(cohomology['betti'])}"]
        for degree, labels in _by_int_key(cohomology["profile"]):
            lines.append(f"  b_{degree} = {len(labels)}: {', '.join(labels)}")
        lines.append(f"  Euler characteristic: {cohomology['euler_characteristic']}")
        if "f_vector" in cohomology:
            lines.append(f"  f-vector: {tuple(cohomology['f_vector'])}")
        return lines

    @staticmethod
    def _pretty_label(c: str, q: int) -> str:
        """1⊗s_q (and 1⊗1⊗s_q over a product) is shown as s_q

        JSON always keeps every factor
        """

        generator = f"s_{q}"
        return generator if is_unit_label(c) else f"{c}{TENSOR_SEPARATOR}{generator}"

    def _pi_lines(self, blocks: list[dict[str, Any]]) -> list[str]:
        if not blocks:
            return ["  (empty)"]
        lines = ["  degree  dim  basis (p, q)"]
        for block in blocks:
            basis = ", ".join(
                f"{self._pretty_label(x['c'], x['q'])} ({x['p']}, {x['q']})"
                for x in block["basis"]
            )
            lines.append(f"  {block['total_degree']:>6}  {block['dim']:>3}  {basis}")
        return lines

    def _k_lines(self, header) -> list[str]:
        k = self.sections["k"]
        header("Rational K-theory (Z+-graded)")
        top = 2 * self.sections.get("n", 1) + 1
        return [
            f"  K_{j}⊗Q: dim {k['even'] if j % 2 == 0 else k['odd']}"
            for j in range(top + 1)
        ]

    def _sigma_lines(self, header) -> list[str]:
        header("Stabilization σ: pi_*⊗Q -> K_{*+1}⊗Q (candidate image)")
        lines = ["  K-degree  target dim  hits"]
        for row in self.sections["sigma"]:
            labels = ", ".join(row["labels"])
            annotation = (
                f"  [{Notes.TARGET_VANISHES.value}]" if row["target_dim"] == 0 else ""
            )
            lines.append(
                f"  {row['k_degree']:>8}  {row['target_dim']:>10}  {labels}{annotation}"
            )
        return lines

    def _endo_lines(self, header) -> list[str]:
        header("φ = f*⊗1 by total degree")
        lines: list[str] = []
        for degree, block in _by_int_key(self.sections["endo"]):
            lines.append(f"  degree {degree}: basis {', '.join(block['basis'])}")
            lines.extend(f"    [{' '.join(row)}]" for row in block["matrix"])
        return lines


def matrix_rows(matrix: QMatrix) -> list[list[str]]:
    return [[format_rational(x) for x in matrix.row(i)] for i in range(matrix.rows)]


def _by_int_key(json_obj: dict[str, Any]) -> list[tuple[str, Any]]:
    """Items of a degree-keyed JSON map in numeric order"""

    return sorted(json_obj.items(), key=lambda item: int(item[0]))
