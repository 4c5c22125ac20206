"""The twelve acceptance criteria as (label, suite, quiver, params), shared by tests and scripts."""

from __future__ import annotations

from dataclasses import dataclass, field

from .suites import Report, run_suite

# wall-clock cap for the exhaustive A1hat comparison; what is left is reported as unverified
A1HAT_TIME_LIMIT = 300.0


@dataclass(frozen=True)
class Criterion:
    label: str
    suite: str
    quivers: tuple[str | None, ...] = (None,)
    params: dict = field(default_factory=dict)

    def run(self) -> Report:
        reports = [run_suite(self.suite, q, **self.params) for q in self.quivers]
        return reports[0] if len(reports) == 1 else combine(self.label, reports)


def combine(name: str, reports: list[Report]) -> Report:
    errors = [r.max_error for r in reports if r.max_error is not None]
    return Report(
        name, all(r.passed for r in reports), {r.name: r.params for r in reports},
        max_error=max(errors) if errors else None,
        counterexample=next((f"{r.name}: {r.counterexample}" for r in reports if r.counterexample), None),
        details={r.name: "pass" if r.passed else "fail" for r in reports} | {"parts": [r.details for r in reports]},
    )


CRITERIA = (
    Criterion("automaton-oracle-a2", "automaton-vs-oracle", ("A2",), {"depth": 6, "n_random": 500, "random_len": 12}),
    Criterion("automaton-oracle-a1hat", "automaton-vs-oracle", ("A1hat",),
              {"depth": 5, "max_index": 4, "n_random": 500, "random_len": 12, "time_limit": A1HAT_TIME_LIMIT}),
    Criterion("rouquier-zimmermann", "rz", ("A2", "A1hat"), {"depth": 6}),
    Criterion("hom-formulas", "homs", ("A2", "A1hat"), {"depth": 6}),
    Criterion("linearity-a2", "linearity", ("A2",), {"n_charges": 20, "n_degenerate": 3, "depth": 6, "tol": 1e-9}),
    Criterion("linearity-a1hat", "linearity", ("A1hat",), {"n_charges": 10, "n_objects": 50, "window": 200, "tol": 1e-3}),
    Criterion("limit-mass", "limits", (None,), {"n_max": 50, "affine_by": 10, "tol": 1e-9}),
    Criterion("farey-tessellation", "tessellation", (None,), {"depth": 8}),
    Criterion("normalization-soundness", "normalize-soundness", (None,), {"n_words": 1000}),
    Criterion("a1hat-closure", "a1hat-closure", (None,), {"m_max": 10_000, "tol_gromov": 1e-6, "tol_mass": 1e-4}),
    Criterion("degeneration", "degeneration", (None,), {"n_charges": 5}),
    Criterion("geodesic", "geodesic", (None,), {"n_cases": 100}),
)
