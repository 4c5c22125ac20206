"""Run configuration, loadable from a JSON file and overridden by command-line flags."""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, field, fields, replace
from fractions import Fraction
from pathlib import Path

from .braids import check_quiver
from .stability import TypeACharge

OUT_ENV = "CY2STAB_OUT"

DEFAULT_CHARGES = {
    "A2": ("1", "0", "-1/3", "1"),
    "A1hat": ("1", "0", "3/10", "1"),
}


@dataclass(frozen=True)
class RunConfig:
    quiver: str = "A2"
    # re/im of Z on the two simples: (P1, P2) for A2, (P0, P1) for A1hat
    charge: tuple[str, ...] | None = None
    depth: int = 6
    window: int = 200
    tol: float = 1e-9
    seed: int = 0
    budget: int = 4000
    out_dir: str | None = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "quiver", check_quiver(self.quiver))
        if self.depth < 1:
            raise ValueError("depth must be at least 1")
        if self.window < 2:
            raise ValueError("window must be at least 2")
        if self.tol <= 0:
            raise ValueError("tolerance must be positive")
        if self.charge is not None:
            if len(self.charge) != 4:
                raise ValueError("charge needs four numbers: re1 im1 re2 im2")
            object.__setattr__(self, "charge", tuple(str(t) for t in self.charge))

    def type_a_charge(self) -> TypeACharge:
        parts = [Fraction(t) for t in (self.charge or DEFAULT_CHARGES[self.quiver])]
        return TypeACharge.make(self.quiver, (parts[0], parts[1]), (parts[2], parts[3]))  # type: ignore[arg-type]

    def output_dir(self) -> Path:
        return Path(self.out_dir or os.environ.get(OUT_ENV, "."))

    def merged(self, **overrides) -> "RunConfig":
        known = {f.name for f in fields(self)}
        return replace(self, **{k: v for k, v in overrides.items() if k in known and v is not None})

    def as_dict(self) -> dict:
        return asdict(self)


def load_config(path: str | os.PathLike) -> RunConfig:
    doc = json.loads(Path(path).read_text())
    known = {f.name for f in fields(RunConfig)}
    unknown = set(doc) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    if "charge" in doc and doc["charge"] is not None:
        doc["charge"] = tuple(doc["charge"])
    return RunConfig(**doc)
