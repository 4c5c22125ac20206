"""Harder-Narasimhan automata for the A2 and A1hat twist groups.

A state carries two stable objects; an object whose HN factors are shifts of
those two is recorded by its multiplicity vector.  Reading a twist letter moves
along an edge and multiplies the vector by the edge matrix.  Shifts are not
tracked.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Sequence

from .braids import GAMMA, BraidWord, NormalForm, Quiver, Tag
from .psl2 import ProjPoint, parse_a1hat_object

Matrix = tuple[tuple[int, int], tuple[int, int]]
State = str | int

IDENT: Matrix = ((1, 0), (0, 1))
_UPPER: Matrix = ((1, 1), (0, 1))
_LOWER: Matrix = ((1, 0), (1, 1))

A2_STATES = ("[P1,P2]", "[P2,X]", "[X,P1]")
_A2_SUPPORT = {"[P1,P2]": ("P1", "P2"), "[P2,X]": ("P2", "X"), "[X,P1]": ("X", "P1")}
_A2_GAMMA = {"[P1,P2]": "[X,P1]", "[X,P1]": "[P2,X]", "[P2,X]": "[P1,P2]"}
_A2_EDGES: dict[tuple[str, str], tuple[str, Matrix]] = {
    ("[P1,P2]", "1"): ("[P1,P2]", _UPPER),
    ("[X,P1]", "X"): ("[X,P1]", _UPPER),
    ("[P2,X]", "2"): ("[P2,X]", _UPPER),
    ("[P1,P2]", "X"): ("[X,P1]", _LOWER),
    ("[X,P1]", "2"): ("[P2,X]", _LOWER),
    ("[P2,X]", "1"): ("[P1,P2]", _LOWER),
}
for _s, _t in _A2_GAMMA.items():
    _A2_EDGES[(_s, "g")] = (_t, IDENT)
    _A2_EDGES[(_t, "g^-1")] = (_s, IDENT)

# phi_v: the images in Z^2 of the two supported objects at each state
_A2_PHI = {
    "[P1,P2]": ((1, 0), (0, 1)),
    "[P2,X]": ((0, -1), (1, -1)),
    "[X,P1]": ((-1, 1), (-1, 0)),
}
# occurrences of (P1, P2) in the minimal complex of each stable object
_A2_OCC = {"P1": (1, 0), "P2": (0, 1), "X": (1, 1)}


class AutomatonError(RuntimeError):
    """No start state or edge applies to the word being read."""


def matmul(m: Matrix, n: Matrix) -> Matrix:
    return (
        (m[0][0] * n[0][0] + m[0][1] * n[1][0], m[0][0] * n[0][1] + m[0][1] * n[1][1]),
        (m[1][0] * n[0][0] + m[1][1] * n[1][0], m[1][0] * n[0][1] + m[1][1] * n[1][1]),
    )


def matvec(m: Matrix, v: tuple[int, int]) -> tuple[int, int]:
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


def a1hat_edge_matrix(j: int, k: int) -> Matrix:
    return ((abs(j - k - 1), abs(j - k - 2)), (abs(j - k), abs(j - k - 1)))


@dataclass(frozen=True)
class Automaton:
    quiver: Quiver

    def supports(self, state: State) -> tuple[str, str]:
        if self.quiver == "A2":
            return _A2_SUPPORT[state]  # type: ignore[index]
        return (f"P{state}", f"P{state + 1}")  # type: ignore[operator]

    def states(self, window: tuple[int, int] = (-3, 3)) -> list[State]:
        if self.quiver == "A2":
            return list(A2_STATES)
        return list(range(window[0], window[1] + 1))

    def labels(self, window: tuple[int, int] = (-3, 3)) -> list[str | int]:
        if self.quiver == "A2":
            return ["1", "2", "X", "g", "g^-1"]
        return list(range(window[0], window[1] + 1)) + ["g", "g^-1"]

    def edge(self, state: State, label: str | int) -> tuple[State, Matrix] | None:
        if self.quiver == "A2":
            return _A2_EDGES.get((state, label))  # type: ignore[arg-type]
        k = state
        if label == "g":
            return (k + 2, IDENT)  # type: ignore[operator]
        if label == "g^-1":
            return (k - 2, IDENT)  # type: ignore[operator]
        if label == k + 1:  # type: ignore[operator]
            return None
        return (label, a1hat_edge_matrix(label, k))  # type: ignore[arg-type]

    def edges(self, window: tuple[int, int] = (-3, 3)) -> list[tuple[State, str | int, State, Matrix]]:
        out = []
        for s in self.states(window):
            for lab in self.labels(window):
                e = self.edge(s, lab)
                if e is not None:
                    out.append((s, lab, e[0], e[1]))
        return out

    def phi(self, state: State) -> tuple[tuple[int, int], tuple[int, int]]:
        if self.quiver == "A2":
            return _A2_PHI[state]  # type: ignore[index]
        return ((state, 1), (state + 1, 1))  # type: ignore[operator]


def build_automaton(quiver: Quiver) -> Automaton:
    return Automaton(quiver)


def automaton_json(quiver: Quiver, window: tuple[int, int] = (-3, 3)) -> str:
    aut = build_automaton(quiver)
    doc = {
        "quiver": quiver,
        "states": [{"id": s, "supports": list(aut.supports(s))} for s in aut.states(window)],
        "edges": [
            {"src": s, "label": lab, "dst": d, "matrix": [list(r) for r in m]}
            for s, lab, d, m in aut.edges(window)
        ],
    }
    if quiver == "A1hat":
        doc["window"] = list(window)
    return json.dumps(doc, indent=1)


@dataclass(frozen=True)
class HNVector:
    quiver: Quiver
    state: State
    mult: tuple[int, int]

    @property
    def supports(self) -> tuple[str, str]:
        return Automaton(self.quiver).supports(self.state)

    def as_dict(self) -> dict[str, int]:
        return {o: m for o, m in zip(self.supports, self.mult) if m}


def start_states(quiver: Quiver, obj: str) -> list[tuple[State, tuple[int, int]]]:
    if quiver == "A2":
        out = []
        for s in A2_STATES:
            sup = _A2_SUPPORT[s]
            if obj in sup:
                out.append((s, (1, 0) if sup[0] == obj else (0, 1)))
        if not out:
            raise AutomatonError(f"{obj!r} is not supported by any A2 state")
        return out
    k = parse_a1hat_object(obj)
    return [(k, (1, 0)), (k - 1, (0, 1))]


def _labels_of(w: BraidWord | NormalForm) -> list[str | int]:
    """Edge labels in reading order (innermost letter first)."""
    if isinstance(w, NormalForm):
        g = "g" if w.gamma > 0 else "g^-1"
        return [t for t in reversed(w.letters())] + [g] * abs(w.gamma)
    out: list[str | int] = []
    for gen in reversed(w.letters):
        if gen.tag == GAMMA:
            out += ["g" if gen.exponent > 0 else "g^-1"] * abs(gen.exponent)
        elif gen.exponent < 0:
            raise AutomatonError(f"inverse letter {gen.text()} has no edge; normalize first")
        else:
            out += [gen.tag] * gen.exponent
    return out


def _read(aut: Automaton, labels: Sequence[str | int], state: State, vec: tuple[int, int]) -> HNVector | None:
    for lab in labels:
        e = aut.edge(state, lab)
        if e is None:
            return None
        state, m = e
        vec = matvec(m, vec)
    return HNVector(aut.quiver, state, vec)


def phi_point(v: HNVector) -> ProjPoint:
    (p, q), (r, s) = Automaton(v.quiver).phi(v.state)
    a, b = v.mult
    return ProjPoint(a * p + b * r, a * q + b * s)


def run_all(w: BraidWord | NormalForm, start: str) -> list[HNVector]:
    """Results from every start state at which the word can be read."""
    aut = build_automaton(w.quiver)
    labels = _labels_of(w)
    out = []
    for state, vec in start_states(w.quiver, start):
        r = _read(aut, labels, state, vec)
        if r is not None:
            out.append(r)
    return out


def run(w: BraidWord | NormalForm, start: str) -> HNVector:
    results = run_all(w, start)
    if not results:
        text = w.text() if isinstance(w, NormalForm) else w.text()
        raise AutomatonError(f"word {text!r} gets stuck from every state supporting {start}")
    points = {phi_point(r) for r in results}
    if len(points) != 1:
        raise AutomatonError(f"start states disagree: {sorted(map(str, points))}")
    return results[0]


def occurrences_from_hn(v: HNVector) -> dict[int, int]:
    a, b = v.mult
    if v.quiver == "A2":
        s, t = v.supports
        return {1: a * _A2_OCC[s][0] + b * _A2_OCC[t][0], 2: a * _A2_OCC[s][1] + b * _A2_OCC[t][1]}
    k = v.state
    return {0: a * abs(k - 1) + b * abs(k), 1: a * abs(k) + b * abs(k + 1)}  # type: ignore[operator]


def mass_from_hn(v: HNVector, masses: Mapping[str, float]) -> float:
    total = 0.0
    for obj, m in zip(v.supports, v.mult):
        if m:
            if obj not in masses:
                raise KeyError(f"no mass for {obj}")
            total += m * masses[obj]
    return total


def homBar_from_hn(v: HNVector, j: int) -> int:
    """A1hat: homBar(P_j, x) from the HN data of x."""
    a, b = v.mult
    k = v.state
    return 2 * (a * abs(k - j) + b * abs(k - j + 1))  # type: ignore[operator]


def theta_set_membership(p: ProjPoint) -> str:
    """First A2 state (in A2_STATES order) whose phi cone contains p."""
    return theta_supports(p)[0]


def theta_supports(p: ProjPoint) -> list[str]:
    out = []
    for s in A2_STATES:
        (p1, q1), (p2, q2) = _A2_PHI[s]
        for sign in (1, -1):
            x, y = sign * p.a, sign * p.c
            # solve (x, y) = u (p1, q1) + v (p2, q2)
            det = p1 * q2 - p2 * q1
            u = (x * q2 - y * p2) / det
            v = (p1 * y - q1 * x) / det
            if u >= 0 and v >= 0:
                out.append(s)
                break
    return out


def tag_of(obj: str) -> Tag:
    return {"P1": "1", "P2": "2", "X": "X"}[obj]
