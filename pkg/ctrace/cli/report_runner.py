import json
from pathlib import Path

from ctrace.shared import ExitCodes

from .main import run
from .report import Report


class ReportRunner:
    """Runs one CLI invocation and stores its JSON report

    Always stores the guess. When comparing against ground truth, the ground
    truth is written on first run (or when overwriting) and the guess must
    match it afterwards
    """

    def __init__(
        self,
        name: str,
        argv: list[str],
        base_dir: Path = Path.home() / "Desktop" / "ctrace_reports",
        overwrite: bool = False,
        compare_against_ground_truth: bool = False,
    ):
        self.name: str = name
        self.argv: list[str] = argv
        self.base_dir: Path = base_dir
        self.overwrite: bool = overwrite
        # True when used for tests, False when used for everything else
        self.compare_against_ground_truth: bool = compare_against_ground_truth
        self.storage_dir: Path = self.base_dir / self.name
        self.storage_dir.mkdir(parents=True, exist_ok=True)

    def run(self) -> Report:
        """Runs the command, stores the report, compares to ground truth"""

        exit_code, report = run(
            [*self.argv, "--json", "--output", str(self.guess_path)]
        )
        assert exit_code == ExitCodes.SUCCESS, f"{self.name} exited with {exit_code}"
        assert report is not None
        self._store_ground_truth()
        self._compare_against_ground_truth()
        return report

    def _store_ground_truth(self) -> None:
        if self.compare_against_ground_truth and (
            self.overwrite or not self.gt_path.exists()
        ):
            self.gt_path.write_text(self.guess_path.read_text())

    def _compare_against_ground_truth(self) -> None:
        if not self.compare_against_ground_truth:
            return

        guess = json.loads(self.guess_path.read_text())
        gt = json.loads(self.gt_path.read_text())
        assert guess == gt, f"{self.name}: report does not match ground truth"

    ###################
    # Path Properties #
    ###################

    @property
    def guess_path(self) -> Path:
        return self.storage_dir / "report_guess.json"

    @property
    def gt_path(self) -> Path:
        return self.storage_dir / "report_gt.json"
