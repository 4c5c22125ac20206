"""Shift-resolved HN factor sequences read off oracle complexes (A2), and the geodesic check.

In the collapsed grading the generators of a minimal complex in degree d form a
linear complex, i.e. an object E_d[-d] with E_d in the standard heart, and the
parts of degree <= d form a filtration.  Heart objects of A2 split into P1, P2,
X = (P2 -> P1) and X' = (P1 -> P2); X' is an extension of P1 by P2.  For a
nondegenerate type-A charge the HN factors of the complex are therefore the
factors of the E_d shifted by -d.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Sequence

from .stability import TypeACharge
from .zigzag import DGComplex, OracleError, _rank, algebra, minimize


@dataclass(frozen=True)
class Factor:
    tag: str
    phase: float
    shift: int | None


@dataclass(frozen=True)
class FactorSequence:
    """HN factors in HN order (decreasing phase), repeated by multiplicity."""

    factors: tuple[Factor, ...]

    def floor(self) -> float:
        self._resolved()
        return min(f.phase for f in self.factors)

    def ceil(self) -> float:
        self._resolved()
        return max(f.phase for f in self.factors)

    def _resolved(self) -> None:
        if not self.factors:
            raise ValueError("empty factor sequence")
        if any(f.shift is None for f in self.factors):
            raise ValueError("unresolved shift in factor sequence")

    def tags(self) -> Counter:
        return Counter(f.tag for f in self.factors)

    def mass(self, masses: dict[str, float]) -> float:
        return sum(masses[f.tag] for f in self.factors)


def heart_strata(x: DGComplex) -> dict[int, dict[str, int]]:
    """Degree d -> multiplicities of P1, P2, X, X' in the heart object E_d."""
    if x.quiver != "A2":
        raise OracleError("heart strata are only implemented for A2")
    x = minimize(x)
    alg = algebra("A2")
    a12, a21 = alg.by_name["a12"], alg.by_name["a21"]
    by_deg: dict[int, dict[int, list[int]]] = {}
    for g, (v, d) in x.gens.items():
        by_deg.setdefault(d, {1: [], 2: []})[v].append(g)
    out = {}
    for d, gs in sorted(by_deg.items()):
        rows21, rows12 = [], []
        for g in gs[2]:
            rows21.append({b: e[a21] for b, e in x.rows[g].items() if a21 in e})
        for g in gs[1]:
            rows12.append({b: e[a12] for b, e in x.rows[g].items() if a12 in e})
        nx, nxp = _rank(rows21), _rank(rows12)
        p1, p2 = len(gs[1]) - nx - nxp, len(gs[2]) - nx - nxp
        if p1 < 0 or p2 < 0:
            raise OracleError(f"degree {d} stratum is not a heart object")
        out[d] = {"P1": p1, "P2": p2, "X": nx, "X'": nxp}
    return out


def oracle_factors(x: DGComplex, c: TypeACharge) -> FactorSequence:
    if c.degenerate():
        raise ValueError("HN factors from strata need a nondegenerate charge")
    ph = c.phases()
    items = []
    for d, mult in heart_strata(x).items():
        counts = Counter({"P1": mult["P1"] + mult["X'"], "P2": mult["P2"] + mult["X'"], "X": mult["X"]})
        for tag, n in counts.items():
            items += [Factor(tag, ph[tag] - d, -d)] * n
    items.sort(key=lambda f: -f.phase)
    return FactorSequence(tuple(items))


def shifted(fs: FactorSequence, s: int) -> FactorSequence:
    return FactorSequence(tuple(Factor(f.tag, f.phase + s, None if f.shift is None else f.shift + s) for f in fs.factors))


def check_geodesic_condition(pieces: Sequence[FactorSequence], hom1: Callable[[int, int], int]) -> bool:
    """For i < j: Hom(A_j, A_i[1]) = 0 or floor(A_i) >= ceil(A_j).

    pieces[i] is the HN factor sequence of the filtration factor A_i; hom1(j, i)
    returns dim Hom(A_j, A_i[1]).
    """
    for i in range(len(pieces)):
        for j in range(i + 1, len(pieces)):
            if pieces[i].floor() >= pieces[j].ceil():
                continue
            if hom1(j, i):
                return False
    return True
