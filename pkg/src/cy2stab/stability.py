"""Central charges, masses, Gromov coordinates and the disk picture.

Charges are given by Z on the two simple projectives.  Masses of the stable
objects follow from Z, and masses of everything else come from the HN
automaton.  For A2 the three Gromov coordinates solve the triangle system;
the normalised mass vector pi(tau) lands in the region Phi (a flat central
triangle with three circular segments attached).  For A1hat the Gromov
coordinates are half second differences of i -> m(P_i).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Callable, Iterable, Sequence

from .automata import HNVector, homBar_from_hn, mass_from_hn, run
from .braids import BraidWord, NormalForm, Quiver, normalize, parse_word
from .psl2 import ProjPoint, farey_adjacent, word_matrix

SQRT2 = math.sqrt(2.0)


class ChargeError(ValueError):
    """The data does not define a type-A stability condition."""


def _pair(z) -> tuple[Real, Real]:
    if isinstance(z, complex):
        return (z.real, z.imag)
    if isinstance(z, tuple):
        return (z[0], z[1])
    return (z, 0)


@dataclass(frozen=True)
class TypeACharge:
    """A2: z = (Z(P1), Z(P2)).  A1hat: z = (Z(P0), Z(P1)).  Parts may be Fractions."""

    quiver: Quiver
    z: tuple[tuple[Real, Real], tuple[Real, Real]]

    @classmethod
    def make(cls, quiver: Quiver, first, second) -> "TypeACharge":
        return cls(quiver, (_pair(first), _pair(second)))

    def __post_init__(self) -> None:
        (a, b), (c, d) = self.z
        if (a, b) == (0, 0) or (c, d) == (0, 0):
            raise ChargeError("central charge of a simple object vanishes")
        cross = a * d - b * c  # Im(Z_2 conj Z_1)
        if cross < 0:
            raise ChargeError("second charge lies clockwise of the first")
        if self.quiver == "A2":
            if (a + c, b + d) == (0, 0):
                raise ChargeError("Z(X) vanishes")
        elif cross == 0 or (isinstance(cross, float) and abs(cross) < 1e-15):
            w = self.omega()
            if abs(w.imag) < 1e-15:
                r = w.real
                if abs(r + 1) < 1e-12:
                    raise ChargeError("omega = -1")
                n = 1 / (1 + r)
                if abs(n - round(n)) < 1e-12 and round(n) != 0:
                    raise ChargeError(f"omega = (1-n)/n with n = {round(n)}")

    def complex(self, i: int) -> complex:
        return complex(float(self.z[i][0]), float(self.z[i][1]))

    def omega(self) -> complex:
        return self.complex(1) / self.complex(0)

    def exact(self) -> bool:
        return all(isinstance(t, (int, Fraction)) for p in self.z for t in p)

    def degenerate(self) -> bool:
        (a, b), (c, d) = self.z
        cross = a * d - b * c
        return cross == 0 if self.exact() else abs(cross) < 1e-12

    def phases(self) -> dict[str, float]:
        """Phases in half-turns: the first simple in (-1, 1], the second within one half-turn above it."""
        z0, z1 = self.complex(0), self.complex(1)
        p0 = cmath.phase(z0) / math.pi
        rel = cmath.phase(z1 / z0) / math.pi
        if rel < 0 or (rel == -1.0):
            rel += 2
        if self.quiver == "A2":
            px = p0 + cmath.phase((z0 + z1) / z0) / math.pi
            if px < p0:
                px += 2
            return {"P1": p0, "P2": p0 + rel, "X": px}
        return {"P0": p0, "P1": p0 + rel}


def masses_of_semistables(c: TypeACharge, ks: Iterable[int] = range(-3, 5)) -> dict[str, float]:
    if c.quiver == "A2":
        z1, z2 = c.complex(0), c.complex(1)
        return {"P1": abs(z1), "P2": abs(z2), "X": abs(z1 + z2)}
    return {f"P{k}": a1hat_mass(c, k) for k in ks}


def a1hat_charge_of(c: TypeACharge, k: int) -> complex:
    return abs(k) * c.complex(1) + abs(k - 1) * c.complex(0)


def a1hat_mass(c: TypeACharge, k: int) -> float:
    return abs(a1hat_charge_of(c, k))


def squared_masses_exact(c: TypeACharge) -> dict[str, Fraction]:
    """|Z|^2 of the A2 stable objects in exact arithmetic."""
    (a, b), (p, q) = c.z
    sq = lambda x, y: Fraction(x) ** 2 + Fraction(y) ** 2  # noqa: E731
    return {"P1": sq(a, b), "P2": sq(p, q), "X": sq(a + p, b + q)}


def hn_of(w: BraidWord | NormalForm | str, base: str, quiver: Quiver | None = None) -> HNVector:
    if isinstance(w, str):
        if quiver is None:
            raise ValueError("quiver needed for text words")
        w = parse_word(w, quiver)
    nf = w if isinstance(w, NormalForm) else normalize(w)
    return run(nf, base)


def mass_of_hn(c: TypeACharge, v: HNVector) -> float:
    if c.quiver == "A2":
        return mass_from_hn(v, masses_of_semistables(c))
    return mass_from_hn(v, {o: a1hat_mass(c, int(o[1:])) for o in v.supports})


def mass_of_object(c: TypeACharge, w: BraidWord | NormalForm | str, base: str) -> float:
    return mass_of_hn(c, hn_of(w, base, c.quiver))


# ---------------------------------------------------------------- Gromov coordinates


@dataclass(frozen=True)
class GromovA2:
    x: float
    y: float
    z: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class GromovA1hat:
    window: int
    values: dict[int, float]


def gromov_from_masses(m1: float, m2: float, mx: float, tol: float = 1e-12) -> GromovA2:
    x, y, z = (m2 + mx - m1) / 2, (m1 + mx - m2) / 2, (m1 + m2 - mx) / 2
    scale = max(m1, m2, mx)
    if min(x, y, z) < -tol * scale:
        raise ChargeError(f"negative Gromov coordinate in {(x, y, z)}")
    return GromovA2(max(x, 0.0), max(y, 0.0), max(z, 0.0))


def gromov(c: TypeACharge, window: int = 10) -> GromovA2 | GromovA1hat:
    if c.quiver == "A2":
        m = masses_of_semistables(c)
        if c.exact() and c.degenerate():
            sq = squared_masses_exact(c)
            # exact collinear case: one coordinate is zero
            if _sqrt_sum_eq(sq["X"], sq["P1"], sq["P2"]):
                return GromovA2(m["P2"], m["P1"], 0.0)
        return gromov_from_masses(m["P1"], m["P2"], m["X"])
    vals = {}
    for i in range(-window, window + 1):
        x = (a1hat_mass(c, i - 1) + a1hat_mass(c, i + 1) - 2 * a1hat_mass(c, i)) / 2
        if x < -1e-12 * max(1.0, a1hat_mass(c, i)):
            raise ChargeError(f"negative Gromov coordinate x_{i} = {x}")
        vals[i] = max(x, 0.0)
    return GromovA1hat(window, vals)


def _sqrt_sum_eq(s: Fraction, a: Fraction, b: Fraction) -> bool:
    """sqrt(s) == sqrt(a) + sqrt(b), decided exactly."""
    # square both sides: s - a - b == 2 sqrt(ab)
    lhs = s - a - b
    return lhs >= 0 and lhs * lhs == 4 * a * b


# ---------------------------------------------------------------- boundary functionals (A2)


def eta(p: ProjPoint) -> tuple[int, int, int]:
    """(homBar(p, P1), homBar(p, P2), homBar(p, X))."""
    return (abs(p.c), abs(p.a), abs(p.a + p.c))


def eta_norm(p: ProjPoint) -> float:
    return math.sqrt(sum(t * t for t in eta(p)))


def homBar_a2_formula(s: ProjPoint) -> dict[str, int]:
    """homBar(E, s) for E in P1, P2, X, X' in terms of the point of s."""
    return {"P1": abs(s.c), "P2": abs(s.a), "X": abs(s.a + s.c), "X'": abs(s.a - s.c)}


def linearity_check_a2(
    c: TypeACharge,
    samples: Sequence[tuple[NormalForm, str]],
    hombar: Callable[[NormalForm, str], tuple[int, int, int]] | None = None,
) -> float:
    """Max |m(s) - (x homBar(P1,s) + y homBar(P2,s) + z homBar(X,s))| over samples."""
    from .psl2 import point_of

    g = gromov(c)
    assert isinstance(g, GromovA2)
    worst = 0.0
    for nf, base in samples:
        if hombar is None:
            h = homBar_a2_formula(point_of(nf, base))
            hb = (h["P1"], h["P2"], h["X"])
        else:
            hb = hombar(nf, base)
        pred = g.x * hb[0] + g.y * hb[1] + g.z * hb[2]
        worst = max(worst, abs(mass_of_object(c, nf, base) - pred))
    return worst


@dataclass(frozen=True)
class A1hatLinearity:
    mass: float
    partial: float
    error: float
    tail_bound: float


def a1hat_tail_bound(c: TypeACharge, v: HNVector, window: int) -> float:
    """Upper bound for the sum over |i| > window of x_i homBar(P_i, X) / 2."""
    z0, z1 = c.complex(0), c.complex(1)
    w = z0 + z1
    a, b = abs(w), abs(z0)
    kk = (w * z0.conjugate()).imag ** 2
    alpha, beta = v.mult
    kprime = abs(v.state) + 1  # type: ignore[arg-type]
    u0 = a * (window - 1) - b
    if u0 <= 0:
        return math.inf
    integral = (1 / a) * (1 / (a * u0) + (b / a + 1 + kprime) / (2 * u0 * u0))
    return kk * (alpha + beta) * integral


def linearity_check_a1hat(c: TypeACharge, nf: NormalForm, base: str, window: int = 200) -> A1hatLinearity:
    v = run(nf, base)
    masses = {i: a1hat_mass(c, i) for i in range(-window - 1, window + 2)}
    partial = 0.0
    for i in range(-window, window + 1):
        x = (masses[i - 1] + masses[i + 1] - 2 * masses[i]) / 2
        partial += 0.5 * x * homBar_from_hn(v, i)
    m = mass_of_hn(c, v)
    return A1hatLinearity(m, partial, abs(m - partial), a1hat_tail_bound(c, v, window))


# ---------------------------------------------------------------- normalisation and pi


def triangle_of(beta: BraidWord | NormalForm | None = None) -> tuple[ProjPoint, ProjPoint, ProjPoint]:
    """Vertices (beta P1, beta P2, beta X) of the translate beta Lambda."""
    if beta is None:
        return (ProjPoint(1, 0), ProjPoint(0, 1), ProjPoint(1, -1))
    m = word_matrix(beta)
    return (ProjPoint(m.a, m.c), ProjPoint(m.b, m.d), ProjPoint(m.a - m.b, m.c - m.d))


def normalization_scale(g: GromovA2, triangle: Sequence[ProjPoint] | None = None) -> float:
    tri = triangle or triangle_of()
    total = g.x * eta_norm(tri[0]) + g.y * eta_norm(tri[1]) + g.z * eta_norm(tri[2])
    return 1.0 / total


def normalize_charge(c: TypeACharge) -> float:
    g = gromov(c)
    assert isinstance(g, GromovA2)
    return normalization_scale(g)


def pi_of_gromov(g: GromovA2, triangle: Sequence[ProjPoint] | None = None) -> tuple[float, float, float]:
    tri = triangle or triangle_of()
    s = normalization_scale(g, tri)
    e = [eta(p) for p in tri]
    w = g.as_tuple()
    return tuple(s * sum(w[j] * e[j][i] for j in range(3)) for i in range(3))  # type: ignore[return-value]


def pi_map(c: TypeACharge | ProjPoint, beta: BraidWord | NormalForm | None = None) -> tuple[float, float, float]:
    """pi of beta * tau (interior) or of a boundary point."""
    if isinstance(c, ProjPoint):
        e = eta(c)
        n = eta_norm(c)
        return (e[0] / n, e[1] / n, e[2] / n)
    g = gromov(c)
    assert isinstance(g, GromovA2)
    return pi_of_gromov(g, triangle_of(beta))


def translate_masses(c: TypeACharge, beta: BraidWord | NormalForm) -> tuple[float, float, float]:
    """(m(P1), m(P2), m(X)) for beta * tau, read from the automaton: m(beta^-1 s)."""
    inv = (beta.word() if isinstance(beta, NormalForm) else beta).inverse()
    return tuple(mass_of_object(c, inv, o) for o in ("P1", "P2", "X"))  # type: ignore[return-value]


# ---------------------------------------------------------------- the region Phi

_PHI_VERTICES = {p: tuple(t / SQRT2 for t in eta(q)) for p, q in (("P1", ProjPoint(1, 0)), ("P2", ProjPoint(0, 1)), ("X", ProjPoint(1, -1)))}
_SEGMENTS = (("segment-1", "P1", "P2"), ("segment-2", "P2", "X"), ("segment-3", "X", "P1"))


def phi_membership(v: Sequence[float], tol: float = 1e-9) -> str:
    x, y, z = v
    r = math.sqrt(x * x + y * y + z * z)
    if r > 1 + tol:
        return "outside"
    if abs(r - 1) <= tol:
        for _, p, q in _SEGMENTS:
            s, t, off = _plane_coords(v, _PHI_VERTICES[p], _PHI_VERTICES[q])
            if off <= tol and s >= -tol and t >= -tol:
                return "boundary-arc"
        return "outside"
    if abs(x + y + z - SQRT2) <= tol and min(y + z - x, z + x - y, x + y - z) >= -tol:
        return "central-triangle"
    for name, p, q in _SEGMENTS:
        s, t, off = _plane_coords(v, _PHI_VERTICES[p], _PHI_VERTICES[q])
        if off <= tol and s >= -tol and t >= -tol and s + t >= 1 - tol:
            return name
    return "outside"


def _plane_coords(v, p, q) -> tuple[float, float, float]:
    """v ~ s p + t q by least squares; returns (s, t, distance off the plane)."""
    pp = sum(a * a for a in p)
    qq = sum(a * a for a in q)
    pq = sum(a * b for a, b in zip(p, q))
    vp = sum(a * b for a, b in zip(v, p))
    vq = sum(a * b for a, b in zip(v, q))
    det = pp * qq - pq * pq
    s = (vp * qq - vq * pq) / det
    t = (vq * pp - vp * pq) / det
    res = [v[i] - s * p[i] - t * q[i] for i in range(3)]
    return s, t, math.sqrt(sum(a * a for a in res))


# ---------------------------------------------------------------- tessellation


def admissible_bodies(quiver: Quiver, max_len: int, indices: Sequence[int] = ()) -> list[NormalForm]:
    """All gamma^0 admissible normal forms with body length <= max_len."""
    out = [NormalForm(quiver, 0, ())]
    if quiver == "A2":
        frontier: list[list[str]] = [[]]
        for _ in range(max_len):
            nxt = []
            for tags in frontier:
                choices = ("1", "2", "X") if not tags else (tags[-1], {"X": "1", "1": "2", "2": "X"}[tags[-1]])
                for t in choices:
                    nxt.append(tags + [t])
            frontier = nxt
            out += [NormalForm("A2", 0, _group_tags(t)) for t in frontier]
        return out
    frontier2: list[tuple[int, ...]] = [()]
    for _ in range(max_len):
        nxt2 = []
        for body in frontier2:
            for k in indices:
                if not body or body[-1] - k != 1:
                    nxt2.append(body + (k,))
        frontier2 = nxt2
        out += [NormalForm("A1hat", 0, b) for b in frontier2]
    return out


def _group_tags(tags: list[str]) -> tuple[tuple[str, int], ...]:
    out: list[list] = []
    for t in tags:
        if out and out[-1][0] == t:
            out[-1][1] += 1
        else:
            out.append([t, 1])
    return tuple((t, m) for t, m in out)


def tessellation_triangles(max_len: int) -> list[tuple[NormalForm, tuple[ProjPoint, ProjPoint, ProjPoint]]]:
    return [(nf, triangle_of(nf)) for nf in admissible_bodies("A2", max_len)]


def triangle_is_farey(tri: Sequence[ProjPoint]) -> bool:
    return all(farey_adjacent(tri[i], tri[j]) for i in range(3) for j in range(i + 1, 3))


def barycenter(tri: Sequence[ProjPoint]) -> tuple[float, float, float]:
    """pi of the charge with equal normalised weights on the three vertices."""
    pts = [pi_map(p) for p in tri]
    return tuple(sum(p[i] for p in pts) / 3 for i in range(3))  # type: ignore[return-value]


# ---------------------------------------------------------------- limits


@dataclass(frozen=True)
class LimitSlope:
    start: int
    slope: float
    hn: tuple[HNVector, ...]


def twist_letter(quiver: Quiver, a: str) -> BraidWord:
    if quiver == "A2":
        return BraidWord.of("A2", [({"P1": "1", "P2": "2", "X": "X"}[a], 1)])
    return BraidWord.of("A1hat", [(int(a[1:]), 1)])


def limit_slope(c: TypeACharge, a: str, x: str, n_max: int = 50, affine_by: int | None = None) -> LimitSlope:
    """Least N with n -> HN(sigma_a^n x) affine on [N, n_max]; slope of the masses there."""
    letter = twist_letter(c.quiver, a)
    word = BraidWord(c.quiver)
    hns = []
    for _ in range(n_max + 1):
        hns.append(run(normalize(word), x))
        word = letter * word
    start = None
    for n in range(n_max - 1, -1, -1):
        h0, h1, h2 = hns[n], hns[n + 1], hns[n + 2] if n + 2 <= n_max else None
        if h2 is None:
            continue
        same = h0.state == h1.state == h2.state
        if not same or any(h2.mult[i] - 2 * h1.mult[i] + h0.mult[i] for i in range(2)):
            break
        start = n
    if start is None or (affine_by is not None and start > affine_by):
        raise ValueError(f"no affine tail for sigma_{a}^n {x} within n <= {n_max}")
    slope = mass_of_hn(c, hns[start + 1]) - mass_of_hn(c, hns[start])
    return LimitSlope(start, slope, tuple(hns))


def delta_a1hat(c: TypeACharge) -> complex:
    z0, z1 = c.complex(0), c.complex(1)
    return z0 / (z0 + z1)


def charge_from_delta(delta: complex) -> TypeACharge:
    """Z(P0) = 1, Z(P1) = (1 - delta) / delta."""
    return TypeACharge.make("A1hat", 1.0 + 0j, (1 - delta) / delta)


def delta_sequence(target: int | None, theta: float, ms: Iterable[int]) -> list[complex]:
    """delta -> target (None for infinity) inside the image of the type-A charges."""
    rot = cmath.exp(-1j * theta)
    if target is None:
        return [m * rot for m in ms]
    return [target + rot / m for m in ms]


def normalized(v: Sequence[float]) -> list[float]:
    s = sum(abs(t) for t in v)
    return [t / s for t in v] if s else list(v)
