"""One function per subcommand: parsed arguments in, Report out"""

from argparse import Namespace
from pathlib import Path
from typing import Any

from ctrace.ktheory import induced_endomorphism, rational_k_theory, sigma_image
from ctrace.shared import DDClass, InvalidProfileError, Notes
from ctrace.spaces import (
    CohomologyProfile,
    builtin_space,
    load_complex,
    load_endomorphism,
    load_space,
)
from ctrace.unitary import AlgebraSpec, UnitaryHomotopyEngine

from .report import Report, matrix_rows


def load_profile(args: Namespace) -> CohomologyProfile:
    if args.file is not None:
        return load_space(args.file)
    name, *params = args.builtin
    return builtin_space(name, params)


def load_spec(args: Namespace) -> AlgebraSpec:
    return AlgebraSpec(
        space=load_profile(args),
        n=args.n,
        dd_trivial=DDClass(args.dd).is_trivial,
    )


def _space_json(profile: CohomologyProfile) -> dict[str, Any]:
    return {"name": profile.space_name, "profile": profile.to_json()}


def cmd_cohomology(args: Namespace) -> Report:
    """Betti numbers and labels"""

    profile = load_profile(args)
    cohomology: dict[str, Any] = {
        "betti": list(profile.betti_numbers),
        "profile": profile.to_json(),
        "euler_characteristic": profile.euler_characteristic,
    }
    if args.file is not None:
        complex_ = load_complex(args.file)
        if complex_ is not None:
            cohomology["f_vector"] = list(complex_.f_vector)
    return Report(space=_space_json(profile), cohomology=cohomology)


def cmd_pi(args: Namespace) -> Report:
    """Bigraded rational homotopy table"""

    spec = load_spec(args)
    pi = UnitaryHomotopyEngine(spec).pi_profile
    return Report(
        space=_space_json(spec.space),
        n=spec.n,
        pi=pi.to_json(),
        notes=[Notes.DEGREE_ZERO.value],
    )


def cmd_split(args: Namespace) -> Report:
    """Based/free split along evaluation at the basepoint"""

    spec = load_spec(args)
    engine = UnitaryHomotopyEngine(spec)
    based, free = engine.split
    return Report(
        space=_space_json(spec.space),
        n=spec.n,
        pi=engine.pi_profile.to_json(),
        split={"based": based.to_json(), "free": free.to_json()},
        notes=[Notes.DEGREE_ZERO.value],
    )


def cmd_ktheory(args: Namespace) -> Report:
    """Z+-graded rational K-theory dimensions"""

    spec = load_spec(args)
    k = rational_k_theory(spec)
    return Report(
        space=_space_json(spec.space),
        n=spec.n,
        k=k.to_json(),
        notes=[k.stable_period_note, Notes.DD_TENSION.value],
    )


def cmd_sigma(args: Namespace) -> Report:
    """Where σ sends the bigraded basis, against the K-theory target"""

    spec = load_spec(args)
    pi = UnitaryHomotopyEngine(spec).pi_profile
    k = rational_k_theory(spec)
    sigma = sigma_image(pi, k)
    notes = [
        Notes.DEGREE_ZERO.value,
        Notes.SIGMA_CANDIDATES.value,
        Notes.DD_TENSION.value,
    ]
    notes.extend(
        f"K_{d}: {sigma.annotation(d)}" for d in sigma.hits if sigma.annotation(d)
    )
    return Report(
        space=_space_json(spec.space),
        n=spec.n,
        pi=pi.to_json(),
        k=k.to_json(),
        sigma=sigma.to_json(),
        notes=notes,
    )


def cmd_endo(args: Namespace) -> Report:
    """Matrices of φ = f*⊗1 on each total degree"""

    spec = load_spec(args)
    if args.endo is None:
        raise InvalidProfileError("endo needs --endo PATH")
    f = load_endomorphism(Path(args.endo), spec.space)
    pi = UnitaryHomotopyEngine(spec).pi_profile
    matrices = induced_endomorphism(f, spec, pi=pi)
    endo = {
        str(degree): {
            "basis": [x.label for x in pi.by_total_degree[degree]],
            "matrix": matrix_rows(matrix),
        }
        for degree, matrix in matrices.items()
    }
    return Report(
        space=_space_json(spec.space),
        n=spec.n,
        pi=pi.to_json(),
        endo=endo,
        notes=[Notes.DEGREE_ZERO.value],
    )


COMMANDS = {
    "cohomology": cmd_cohomology,
    "pi": cmd_pi,
    "split": cmd_split,
    "ktheory": cmd_ktheory,
    "sigma": cmd_sigma,
    "endo": cmd_endo,
}
