"""Verification suites.  Each returns a Report; the CLI and the acceptance tests share them."""

from __future__ import annotations

import cmath
import inspect
import itertools
import json
import math
import random
import time
from collections import Counter, deque
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from . import zigzag as zz
from .automata import (
    HNVector,
    build_automaton,
    homBar_from_hn,
    matvec,
    occurrences_from_hn,
    phi_point,
    run,
)
from .braids import (
    GAMMA,
    BraidWord,
    Generator,
    NormalForm,
    Quiver,
    expand_a1hat,
    exponent_sum,
    normalize,
)
from .filtrations import FactorSequence, check_geodesic_condition, oracle_factors
from .psl2 import ProjPoint, point_of, word_matrix
from .stability import (
    GromovA1hat,
    TypeACharge,
    a1hat_mass,
    admissible_bodies,
    barycenter,
    charge_from_delta,
    delta_sequence,
    eta_norm,
    gromov,
    gromov_from_masses,
    homBar_a2_formula,
    limit_slope,
    linearity_check_a1hat,
    mass_of_hn,
    masses_of_semistables,
    normalization_scale,
    normalized,
    phi_membership,
    tessellation_triangles,
    translate_masses,
    triangle_is_farey,
)


@dataclass
class Report:
    name: str
    passed: bool
    params: dict = field(default_factory=dict)
    max_error: float | None = None
    counterexample: str | None = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=1, default=str)

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        bits = [f"{k}={v}" for k, v in self.details.items() if isinstance(v, (int, float, str)) and not isinstance(v, bool)]
        if self.max_error is not None:
            bits.insert(0, f"max_error={self.max_error:.3g}")
        if self.counterexample:
            bits.append(f"counterexample={self.counterexample!r}")
        return f"[{tag}] {self.name}: " + ", ".join(bits)


# ---------------------------------------------------------------- sample generation

A2_STARTS = ("P1", "P2", "X")
A1HAT_STARTS = ("P0", "P1")


def a2_normal_forms(depth: int, gammas: Sequence[int] = range(-3, 4)) -> list[NormalForm]:
    return [NormalForm("A2", n, nf.body) for n in gammas for nf in admissible_bodies("A2", depth)]


def random_twist_word(quiver: Quiver, length: int, rng: random.Random) -> BraidWord:
    """Uniform word over the two vertex twists and their inverses."""
    tags = ("1", "2") if quiver == "A2" else (0, 1)
    return BraidWord(quiver, tuple(Generator(quiver, rng.choice(tags), rng.choice((1, -1))) for _ in range(length)))


def random_words(quiver: Quiver, count: int, max_len: int, seed: int) -> list[BraidWord]:
    rng = random.Random(seed)
    return [random_twist_word(quiver, rng.randint(1, max_len), rng) for _ in range(count)]


def random_general_word(quiver: Quiver, max_len: int, rng: random.Random, index_range: int = 5) -> BraidWord:
    """Words over every letter type, including g and larger exponents."""
    letters = []
    for _ in range(rng.randint(0, max_len)):
        if rng.random() < 0.2:
            tag = GAMMA
        elif quiver == "A2":
            tag = rng.choice(("1", "2", "X"))
        else:
            tag = rng.randint(-index_range, index_range)
        e = rng.choice((1, 1, 1, 2, 3)) * rng.choice((1, -1))
        letters.append(Generator(quiver, tag, e))
    return BraidWord(quiver, tuple(letters))


def free_words_a1hat(depth: int) -> list[BraidWord]:
    """All freely reduced words of length <= depth over s[0]^+-1, s[1]^+-1."""
    out = [()]
    frontier: list[tuple[tuple[int, int], ...]] = [()]
    for _ in range(depth):
        nxt = []
        for w in frontier:
            for k in (0, 1):
                for s in (1, -1):
                    if w and w[-1] == (k, -s):
                        continue
                    nxt.append(w + ((k, s),))
        frontier = nxt
        out += frontier
    return [BraidWord.of("A1hat", list(w)) for w in out]


def spherical_sample(quiver: Quiver, depth: int = 6) -> list[tuple[BraidWord | NormalForm, str]]:
    """The generated sphericals used by the Rouquier-Zimmermann and hom suites."""
    if quiver == "A2":
        return [(nf, s) for nf in a2_normal_forms(depth) for s in A2_STARTS]
    return [(w, s) for w in free_words_a1hat(depth) for s in A1HAT_STARTS]


def seeded_charges(quiver: Quiver, count: int, seed: int, degenerate: int = 0) -> list[TypeACharge]:
    """Rational nondegenerate charges, followed by `degenerate` exactly degenerate ones (A2)."""
    rng = random.Random(seed)
    out: list[TypeACharge] = []

    def rat(lo: float, hi: float) -> Fraction:
        return Fraction(round(rng.uniform(lo, hi) * 24), 24)

    while len(out) < count - degenerate:
        if quiver == "A2":
            a, b = rat(-2, 2), rat(-2, 2)
            c, d = rat(-2, 2), rat(-2, 2)
            if (a, b) == (0, 0) or a * d - b * c <= 0:
                continue
            out.append(TypeACharge.make("A2", (a, b), (c, d)))
        else:
            r = rng.uniform(0.5, 2.0)
            th = rng.uniform(0.05, 0.95) * math.pi
            out.append(TypeACharge.make("A1hat", 1.0, r * cmath.exp(1j * th)))
    for i in range(degenerate):
        if quiver != "A2":
            raise ValueError("degenerate A1hat charges are not sampled")
        a, b = rat(0.2, 2), rat(-2, 2)
        t = rat(0.2, 2)
        sign = 1 if i % 2 == 0 else -1
        if sign < 0 and t == 1:
            t = Fraction(1, 2)
        out.append(TypeACharge.make("A2", (a, b), (sign * t * a, sign * t * b)))
    return out


def _label(w: BraidWord | NormalForm, start: str) -> str:
    return f"{w.text() or 'g^0'} @ {start}"


def _oracle(w: BraidWord | NormalForm, start: str, budget: int | None = None) -> zz.DGComplex:
    return zz.apply_word(w, zz.base_object(w.quiver, start), budget)


def _occ(x: zz.DGComplex) -> dict[int, int]:
    return {v: n for v, n in zz.occurrence_vector(x).items()}


# ---------------------------------------------------------------- automaton against oracle


def check_automaton_vs_oracle_a2(depth: int = 6, n_random: int = 500, random_len: int = 12, seed: int = 0) -> Report:
    cases: list[tuple[BraidWord | NormalForm, str]] = [(nf, s) for nf in a2_normal_forms(depth) for s in A2_STARTS]
    cases += [(w, s) for w in random_words("A2", n_random, random_len, seed) for s in A2_STARTS]
    bad = None
    point_bad = 0
    for w, s in cases:
        nf = w if isinstance(w, NormalForm) else normalize(w)
        v = run(nf, s)
        x = _oracle(w, s)
        if occurrences_from_hn(v) != _occ(x):
            bad = bad or _label(w, s)
        if phi_point(v) != point_of(nf, s):
            point_bad += 1
    return Report(
        "automaton-vs-oracle[A2]", bad is None and point_bad == 0,
        {"depth": depth, "n_random": n_random, "random_len": random_len, "seed": seed},
        counterexample=bad, details={"cases": len(cases), "point_mismatches": point_bad},
    )


def _a1hat_subtree_size(first: int, depth_left: int, indices: Sequence[int]) -> int:
    """Number of admissible extensions (leftwards) of a body whose leftmost letter is `first`."""
    layer = {first: 1}
    total = 0
    for _ in range(depth_left):
        layer = {a: sum(c for k, c in layer.items() if a - k != 1) for a in indices}
        total += sum(layer.values())
    return total


def check_automaton_vs_oracle_a1hat(
    depth: int = 5,
    max_index: int = 4,
    n_random: int = 500,
    random_len: int = 12,
    seed: int = 0,
    budget: int | None = 4000,
    starts: Sequence[str] = A1HAT_STARTS,
    time_limit: float | None = None,
) -> Report:
    """Exhaustive bodies, breadth first and extended leftwards so suffixes are shared, plus random words.

    A case whose oracle complex passes the generator budget is counted as
    unverified, together with every longer body sharing that suffix; the suite
    only passes when nothing is left unverified.  Past `time_limit` seconds the
    remaining queue and random words are counted as unverified too.
    """
    indices = list(range(-max_index, max_index + 1))
    verified = unverified = 0
    bad = None
    t0 = time.time()
    # each start, and the random words, get an equal share of the time
    shares = len(starts) + (1 if n_random else 0)
    for i, s in enumerate(starts):
        deadline = None if time_limit is None else t0 + time_limit * (i + 1) / shares
        # (body, complex of body[1:] applied to the start); the complex of body is built on dequeue
        queue: deque[tuple[tuple[int, ...], zz.DGComplex]] = deque([((), zz.minimize(zz.base_object("A1hat", s)))])
        while queue:
            body, parent = queue.popleft()
            rest = _a1hat_subtree_size(body[0], depth - len(body), indices) if body else 0
            if deadline is not None and time.time() > deadline:
                unverified += 1 + (rest if body else sum(1 + _a1hat_subtree_size(a, depth - 1, indices) for a in indices))
                continue
            try:
                x = zz.apply_word(NormalForm("A1hat", 0, body[:1]), parent, budget) if body else parent
            except zz.OracleBudgetExceeded:
                unverified += 1 + rest
                continue
            nf = NormalForm("A1hat", 0, body)
            if occurrences_from_hn(run(nf, s)) != _occ(x):
                bad = bad or _label(nf, s)
            verified += 1
            if len(body) < depth:
                queue.extend(((a,) + body, x) for a in indices if not (body and a - body[0] == 1))
    edge_bad = _a1hat_edge_rules(max_index)
    rand_unverified = 0
    for w in random_words("A1hat", n_random, random_len, seed):
        for s in starts:
            if time_limit is not None and time.time() > t0 + time_limit:
                rand_unverified += 1
                continue
            try:
                x = _oracle(w, s, budget)
            except zz.OracleBudgetExceeded:
                rand_unverified += 1
                continue
            if occurrences_from_hn(run(normalize(w), s)) != _occ(x):
                bad = bad or _label(w, s)
            verified += 1
    unverified += rand_unverified
    passed = bad is None and edge_bad is None and unverified == 0
    return Report(
        "automaton-vs-oracle[A1hat]", passed,
        {"depth": depth, "max_index": max_index, "n_random": n_random, "random_len": random_len, "seed": seed, "budget": budget,
         "time_limit": time_limit},
        counterexample=bad or edge_bad,
        details={
            "verified": verified, "unverified": unverified, "random_unverified": rand_unverified,
            "edge_rules_ok": edge_bad is None, "seconds": round(time.time() - t0, 1),
        },
    )


def _a1hat_edge_rules(max_index: int) -> str | None:
    """Each edge matrix column is the HN vector of sigma_j P_k or sigma_j P_(k+1), checked on occurrences."""
    aut = build_automaton("A1hat")
    for j in range(-max_index, max_index + 1):
        for k in range(-max_index, max_index + 1):
            e = aut.edge(k, j)
            if e is None:
                continue
            dst, m = e
            for col, obj in ((0, f"P{k}"), (1, f"P{k + 1}")):
                vec = (m[0][col], m[1][col])
                x = _oracle(NormalForm("A1hat", 0, (j,)), obj)
                if occurrences_from_hn(HNVector("A1hat", dst, vec)) != _occ(x):
                    return f"edge s[{j}]: {k} -> {dst}, column {col}"
    return None


# ---------------------------------------------------------------- Rouquier-Zimmermann and homs


def rz_expected(quiver: Quiver, p: ProjPoint) -> dict[int, int]:
    if quiver == "A2":
        return {1: abs(p.a), 2: abs(p.c)}
    return {0: abs(p.a - p.c), 1: abs(p.a)}


def check_rz(quiver: Quiver, depth: int = 6) -> Report:
    bad = None
    n = 0
    for w, s in spherical_sample(quiver, depth):
        n += 1
        if _occ(_oracle(w, s)) != rz_expected(quiver, point_of(w, s)):
            bad = bad or _label(w, s)
    return Report(f"rz[{quiver}]", bad is None, {"depth": depth}, counterexample=bad, details={"cases": n})


def hom_expected(quiver: Quiver, p: ProjPoint) -> dict[str, int]:
    if quiver == "A2":
        return homBar_a2_formula(p)
    # homBar(x, P1) = 2 n0, homBar(x, P0) = 2 n1
    return {"P1": 2 * abs(p.a - p.c), "P0": 2 * abs(p.a)}


def oracle_homs(quiver: Quiver, x: zz.DGComplex) -> dict[str, int]:
    names = ("P1", "P2", "X", "X'") if quiver == "A2" else ("P1", "P0")
    return {e: zz.homBar(zz.base_object(quiver, e), x, check=False) for e in names}


def check_homs(quiver: Quiver, depth: int = 6) -> Report:
    bad = None
    n = 0
    for w, s in spherical_sample(quiver, depth):
        n += 1
        if oracle_homs(quiver, _oracle(w, s)) != hom_expected(quiver, point_of(w, s)):
            bad = bad or _label(w, s)
    return Report(f"homs[{quiver}]", bad is None, {"depth": depth}, counterexample=bad, details={"cases": n})


# ---------------------------------------------------------------- linearity


def check_linearity_a2(n_charges: int = 20, n_degenerate: int = 3, depth: int = 6, seed: int = 0, tol: float = 1e-9) -> Report:
    """Masses from the automaton against Gromov coordinates times oracle homBar values."""
    sample = [(nf, s) for nf in a2_normal_forms(depth, gammas=range(0, 3)) for s in A2_STARTS]
    homs = []
    hn = []
    for nf, s in sample:
        h = oracle_homs("A2", _oracle(nf, s))
        homs.append((h["P1"], h["P2"], h["X"]))
        hn.append(run(nf, s))
    worst, where = 0.0, None
    charges = seeded_charges("A2", n_charges, seed, n_degenerate)
    for ci, c in enumerate(charges):
        g = gromov(c)
        for (nf, s), hb, v in zip(sample, homs, hn):
            err = abs(mass_of_hn(c, v) - (g.x * hb[0] + g.y * hb[1] + g.z * hb[2]))
            if err > worst:
                worst, where = err, f"{_label(nf, s)} (charge {ci})"
    passed = worst <= tol
    return Report(
        "linearity[A2]", passed, {"n_charges": n_charges, "n_degenerate": n_degenerate, "depth": depth, "seed": seed, "tol": tol},
        max_error=worst, counterexample=None if passed else where,
        details={"objects": len(sample), "degenerate": sum(c.degenerate() for c in charges)},
    )


def check_linearity_a1hat(
    n_charges: int = 10, n_objects: int = 50, window: int = 200, depth: int = 6, seed: int = 0, tol: float = 1e-3
) -> Report:
    rng = random.Random(seed)
    pool = [(w, s) for w, s in spherical_sample("A1hat", depth) if len(w)]
    objects = rng.sample(pool, n_objects)
    worst, where, bound_ok = 0.0, None, True
    max_bound = 0.0
    failures = 0
    for ci, c in enumerate(seeded_charges("A1hat", n_charges, seed)):
        for w, s in objects:
            r = linearity_check_a1hat(c, normalize(w), s, window)
            max_bound = max(max_bound, r.tail_bound)
            if r.tail_bound < r.error:
                bound_ok = False
            if r.error > tol:
                failures += 1
            if r.error > worst:
                worst, where = r.error, f"{_label(w, s)} (charge {ci})"
    passed = worst <= tol and bound_ok
    return Report(
        "linearity[A1hat]", passed, {"n_charges": n_charges, "n_objects": n_objects, "window": window, "seed": seed, "tol": tol},
        max_error=worst, counterexample=None if passed else where,
        details={"max_tail_bound": max_bound, "tail_bound_dominates": bound_ok, "cases_over_tol": failures,
                 "cases": n_charges * n_objects},
    )


# ---------------------------------------------------------------- limit mass

LIMIT_PAIRS = {"A2": (("P1", "P2"), ("P2", "P1"), ("P1", "X")), "A1hat": (("P0", "P1"),)}


def check_limits(n_charges: int = 5, seed: int = 0, n_max: int = 50, affine_by: int = 10, tol: float = 1e-9) -> Report:
    worst, bad = 0.0, None
    starts = []
    for quiver, pairs in LIMIT_PAIRS.items():
        for c in seeded_charges(quiver, n_charges, seed):
            for a, x in pairs:
                hb = zz.homBar(zz.base_object(quiver, a), zz.base_object(quiver, x))
                ma = masses_of_semistables(c)[a] if quiver == "A2" else a1hat_mass(c, int(a[1:]))
                try:
                    r = limit_slope(c, a, x, n_max=n_max, affine_by=affine_by)
                except ValueError:
                    bad = bad or f"sigma_{a}^n {x} ({quiver})"
                    continue
                starts.append(r.start)
                # masses themselves must be affine in n from the start on
                ms = [mass_of_hn(c, v) for v in r.hn[r.start:]]
                drift = max(abs(ms[i] - ms[0] - i * r.slope) for i in range(len(ms)))
                err = max(abs(r.slope - ma * hb), drift / max(1.0, ms[-1]))
                if err > worst:
                    worst = err
                if err > tol:
                    bad = bad or f"sigma_{a}^n {x} ({quiver})"
    return Report(
        "limits", bad is None, {"n_charges": n_charges, "seed": seed, "n_max": n_max, "affine_by": affine_by, "tol": tol},
        max_error=worst, counterexample=bad, details={"latest_affine_start": max(starts) if starts else -1},
    )


# ---------------------------------------------------------------- tessellation


def charge_from_gromov(x: float, y: float, z: float) -> TypeACharge:
    """A2 charge with Z(P1) real positive and the given Gromov coordinates."""
    m1, m2, mx = y + z, x + z, x + y
    cos = (mx * mx - m1 * m1 - m2 * m2) / (2 * m1 * m2)
    th = math.acos(max(-1.0, min(1.0, cos)))
    return TypeACharge.make("A2", m1 + 0j, m2 * cmath.exp(1j * th))


def check_tessellation(depth: int = 8, tol: float = 1e-9) -> Report:
    tris = tessellation_triangles(depth)
    bad = None
    centers = []
    worst = 0.0
    for nf, tri in tris:
        if not triangle_is_farey(tri):
            bad = bad or f"{nf.text()} not Farey"
            continue
        # the charge whose pi-image is the barycenter of the flat triangle
        w = [1 / eta_norm(p) for p in tri]
        c = charge_from_gromov(*w)
        g = gromov(c)
        s = normalization_scale(g, tri)
        v = tuple(s * m for m in translate_masses(c, nf))
        worst = max(worst, max(abs(a - b) for a, b in zip(v, barycenter(tri))))
        cls = phi_membership(v, tol)
        r = math.sqrt(sum(t * t for t in v))
        if cls in ("outside", "boundary-arc") or r >= 1:
            bad = bad or f"{nf.text()}: {cls}, |pi| = {r}"
        centers.append(v)
    dup = _closest_pair(centers)
    overlap = _first_overlap(tris, centers)
    passed = bad is None and dup > 1e-9 and overlap is None and worst <= 1e-9
    return Report(
        "tessellation", passed, {"depth": depth, "tol": tol}, max_error=worst,
        counterexample=bad or overlap,
        details={"triangles": len(tris), "min_barycenter_distance": dup},
    )


def _closest_pair(pts: list[tuple[float, float, float]]) -> float:
    best = math.inf
    order = sorted(range(len(pts)), key=lambda i: pts[i])
    for i, j in itertools.combinations(order, 2):
        d = math.dist(pts[i], pts[j])
        best = min(best, d)
    return best


def _first_overlap(tris, centers) -> str | None:
    """A barycenter lying inside some other pi-triangle, if any."""
    from .stability import pi_map

    flat = [[pi_map(p) for p in tri] for _, tri in tris]
    for i, v in enumerate(centers):
        for j, (a, b, c) in enumerate(flat):
            if i != j and _inside(v, a, b, c):
                return f"barycenter of {tris[i][0].text()} inside {tris[j][0].text()}"
    return None


def _inside(v, a, b, c, tol: float = 1e-9) -> bool:
    # solve v = a + s (b - a) + t (c - a) in the plane of the triangle
    u = [b[i] - a[i] for i in range(3)]
    w = [c[i] - a[i] for i in range(3)]
    p = [v[i] - a[i] for i in range(3)]
    n = (u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0])
    nn = math.sqrt(sum(t * t for t in n))
    if abs(sum(p[i] * n[i] for i in range(3))) / nn > tol:
        return False
    uu = sum(t * t for t in u)
    ww = sum(t * t for t in w)
    uw = sum(u[i] * w[i] for i in range(3))
    pu = sum(p[i] * u[i] for i in range(3))
    pw = sum(p[i] * w[i] for i in range(3))
    det = uu * ww - uw * uw
    s = (pu * ww - pw * uw) / det
    t = (pw * uu - pu * uw) / det
    return s > tol and t > tol and s + t < 1 - tol


# ---------------------------------------------------------------- normalization soundness


def check_normalize_soundness(n_words: int = 1000, max_len: int = 20, seed: int = 0) -> Report:
    bad = None
    rng = random.Random(seed)
    for quiver in ("A2", "A1hat"):
        for _ in range(n_words):
            w = random_general_word(quiver, max_len, rng)
            nf = normalize(w)
            if normalize(nf.word()) != nf:
                bad = bad or f"{quiver}: {w.text()} (not idempotent)"
            if quiver == "A2":
                same = word_matrix(w) == word_matrix(nf) and exponent_sum(w) == exponent_sum(nf)
            else:
                same = expand_a1hat(w) == expand_a1hat(nf)
            if not same:
                bad = bad or f"{quiver}: {w.text()}"
    return Report("normalize-soundness", bad is None, {"n_words": n_words, "max_len": max_len, "seed": seed},
                  counterexample=bad, details={"words": 2 * n_words})


# ---------------------------------------------------------------- A1hat closure


def a1hat_probes() -> list[tuple[str, str]]:
    """Ten sphericals: P_-2..P_2 and five twisted objects."""
    plain = [("", f"P{k}") for k in range(-2, 3)]
    return plain + [("s[0]", "P1"), ("s[1]", "P0"), ("s[2]", "P0"), ("s[-1] s[1]", "P0"), ("s[3]", "P-1")]


def _probe_hns(probes) -> list[HNVector]:
    from .braids import parse_word

    return [run(normalize(parse_word(w, "A1hat")), s) for w, s in probes]


def closure_sequence(target: int | None, theta: float, ms: Sequence[int], window: int, probes=None) -> list[tuple[list[float], list[float]]]:
    """(normalised Gromov vector on the window, projectivised probe masses) along the approach."""
    hns = _probe_hns(probes or a1hat_probes())
    out = []
    for d in delta_sequence(target, theta, ms):
        c = charge_from_delta(d)
        g = gromov(c, window)
        assert isinstance(g, GromovA1hat)
        xs = normalized([g.values[i] for i in range(-window, window + 1)])
        out.append((xs, normalized([mass_of_hn(c, v) for v in hns])))
    return out


def stated_limits(target: int | None, window: int, probes=None) -> tuple[list[float], list[float]]:
    hns = _probe_hns(probes or a1hat_probes())
    idx = range(-window, window + 1)
    if target is None:
        xs = normalized([-1.0 if i == 0 else 1.0 if i == 1 else 0.0 for i in idx])
        fs = normalized([homBar_from_hn(v, 1) - homBar_from_hn(v, 0) for v in hns])
    else:
        xs = [1.0 if i == target else 0.0 for i in idx]
        fs = normalized([homBar_from_hn(v, target) for v in hns])
    return xs, fs


def pinf_functional(v: HNVector) -> int:
    """lim homBar(P_i, x) / |i|, i.e. 2 (alpha + beta)."""
    return 2 * (v.mult[0] + v.mult[1])


def check_a1hat_closure(
    targets: Sequence[int | None] = (-2, -1, 0, 1, 2, None),
    thetas: Sequence[float] = (math.pi / 3, 2 * math.pi / 3),
    m_max: int = 10_000,
    window: int = 10,
    tol_gromov: float = 1e-6,
    tol_mass: float = 1e-4,
) -> Report:
    """Limits estimated from the last two terms of m = m_max/2, m_max by Richardson extrapolation."""
    rows = {}
    passed = True
    bad = None
    for target in targets:
        lim_x, lim_f = stated_limits(target, window)
        gerr = ferr = raw_g = raw_f = 0.0
        for th in thetas:
            (x1, f1), (x2, f2) = closure_sequence(target, th, [m_max // 2, m_max], window)
            ex = [2 * b - a for a, b in zip(x1, x2)]
            ef = [2 * b - a for a, b in zip(f1, f2)]
            gerr = max(gerr, max(abs(a - b) for a, b in zip(ex, lim_x)))
            ferr = max(ferr, max(abs(a - b) for a, b in zip(ef, lim_f)))
            raw_g = max(raw_g, max(abs(a - b) for a, b in zip(x2, lim_x)))
            raw_f = max(raw_f, max(abs(a - b) for a, b in zip(f2, lim_f)))
        ok = gerr <= tol_gromov and ferr <= tol_mass
        name = "inf" if target is None else str(target)
        rows[name] = {"gromov_error": gerr, "mass_error": ferr, "raw_gromov_error": raw_g, "raw_mass_error": raw_f, "pass": ok}
        if not ok:
            passed = False
            bad = bad or f"target {name}"
    return Report(
        "a1hat-closure", passed,
        {"targets": [("inf" if t is None else t) for t in targets], "thetas": list(thetas), "m_max": m_max, "window": window,
         "tol_gromov": tol_gromov, "tol_mass": tol_mass},
        max_error=max(max(r["gromov_error"] / tol_gromov, r["mass_error"] / tol_mass) for r in rows.values()),
        counterexample=bad, details={"targets": rows},
    )


# ---------------------------------------------------------------- degeneration


def _hn_dict(w: BraidWord, obj: str) -> tuple[object, Counter]:
    v = run(normalize(w), obj)
    return v.state, Counter(v.as_dict())


DEGENERATIONS_A2 = (
    # (x, y, z) of the triangle x -> y -> z, and the degenerating letter
    (("P1", "X", "P2"), "2"),
    (("X", "P2", "P1"), "1"),
    (("P2", "P1", "X"), "X"),
)


def degenerations_a1hat(max_index: int = 4) -> list[tuple[tuple[str, str, str], int, int]]:
    """(x, y, z), letter, multiplicity of the middle term."""
    out = [(("P1", "P0", "P-1"), j, 2) for j in range(-max_index, max_index + 1) if j not in (0, 1)]
    out += [(("P3", "P2", "P1"), j, 2) for j in (0, 1)]
    return out


def check_degeneration(n_charges: int = 5, seed: int = 0, max_index: int = 4) -> Report:
    bad = None
    cases = 0
    for quiver in ("A2", "A1hat"):
        charges = seeded_charges(quiver, n_charges, seed)
        if quiver == "A2":
            items = [(t, BraidWord.of("A2", [(l, 1)]), 1) for t, l in DEGENERATIONS_A2]
        else:
            items = [(t, BraidWord.of("A1hat", [(j, 1)]), k) for t, j, k in degenerations_a1hat(max_index)]
        for (x, y, z), letter, mult in items:
            cases += 1
            for c in charges:
                m = lambda o: mass_of_hn(c, run(NormalForm(quiver, 0, ()), o))  # noqa: E731
                if not mult * m(y) < m(x) + m(z):
                    bad = bad or f"{quiver} {x}->{y}->{z}: pre-twist inequality not strict"
            sx, hx = _hn_dict(letter, x)
            sy, hy = _hn_dict(letter, y)
            sz, hz = _hn_dict(letter, z)
            lhs = Counter({k: mult * v for k, v in hy.items()})
            if not (sx == sy == sz) or lhs != hx + hz:
                bad = bad or f"{quiver} {letter.text()} on {x}->{y}->{z}"
    return Report("degeneration", bad is None, {"n_charges": n_charges, "seed": seed, "max_index": max_index},
                  counterexample=bad, details={"triangles": cases})


# ---------------------------------------------------------------- geodesic condition


def geodesic_case(nf: NormalForm, start: str, letter: str, c: TypeACharge) -> tuple[bool, bool]:
    """(geodesic condition holds, HN multiplicities add up) for the filtration sigma(HN(x))."""
    x = _oracle(nf, start)
    fs = oracle_factors(x, c)
    sig = BraidWord.of("A2", [(letter, 1)])
    images: dict[str, zz.DGComplex] = {}
    pieces: list[FactorSequence] = []
    cxs: list[zz.DGComplex] = []
    for f in fs.factors:
        if f.tag not in images:
            images[f.tag] = _oracle(sig, f.tag)
        cx = images[f.tag].shift(f.shift)
        cxs.append(cx)
        pieces.append(oracle_factors(cx, c))
    cache: dict[tuple[int, int], int] = {}
    key = [(f.tag, f.shift) for f in fs.factors]

    def hom1(j: int, i: int) -> int:
        k = (key.index(key[j]), key.index(key[i]))
        if k not in cache:
            cache[k] = zz.hom_dims(cxs[k[0]], cxs[k[1]]).get(1, 0)
        return cache[k]

    geodesic = check_geodesic_condition(pieces, hom1)
    total = Counter()
    for p in pieces:
        total.update(p.tags())
    after = run(normalize(sig * nf.word()), start)
    additive = dict(total) == after.as_dict()
    masses = masses_of_semistables(c)
    additive = additive and abs(sum(p.mass(masses) for p in pieces) - mass_of_hn(c, after)) <= 1e-9 * max(1.0, mass_of_hn(c, after))
    return geodesic, additive


def check_geodesic(n_cases: int = 100, depth: int = 6, seed: int = 0) -> Report:
    rng = random.Random(seed)
    aut = build_automaton("A2")
    nfs = a2_normal_forms(depth, gammas=range(0, 3))
    charges = seeded_charges("A2", 5, seed)
    bad = None
    n_geo = n_add = 0
    for _ in range(n_cases):
        nf, s = rng.choice(nfs), rng.choice(A2_STARTS)
        v = run(nf, s)
        letter = rng.choice([t for t in ("1", "2", "X") if aut.edge(v.state, t)])
        c = rng.choice(charges)
        geo, add = geodesic_case(nf, s, letter, c)
        n_geo += geo
        n_add += add
        if not (geo and add):
            bad = bad or f"s{letter} on {_label(nf, s)}"
    return Report("geodesic", bad is None, {"n_cases": n_cases, "depth": depth, "seed": seed}, counterexample=bad,
                  details={"geodesic_true": n_geo, "additive": n_add})


# ---------------------------------------------------------------- registry

_SUITES: dict[tuple[str, str | None], Callable[..., Report]] = {
    ("automaton-vs-oracle", "A2"): check_automaton_vs_oracle_a2,
    ("automaton-vs-oracle", "A1hat"): check_automaton_vs_oracle_a1hat,
    ("rz", "A2"): lambda **kw: check_rz("A2", **kw),
    ("rz", "A1hat"): lambda **kw: check_rz("A1hat", **kw),
    ("homs", "A2"): lambda **kw: check_homs("A2", **kw),
    ("homs", "A1hat"): lambda **kw: check_homs("A1hat", **kw),
    ("linearity", "A2"): check_linearity_a2,
    ("linearity", "A1hat"): check_linearity_a1hat,
    ("tessellation", None): check_tessellation,
    ("limits", None): check_limits,
    ("a1hat-closure", None): check_a1hat_closure,
    ("geodesic", None): check_geodesic,
    ("normalize-soundness", None): check_normalize_soundness,
    ("degeneration", None): check_degeneration,
}
SUITE_NAMES = sorted({name for name, _ in _SUITES})
_TARGETS = {"rz": check_rz, "homs": check_homs}


def run_suite(name: str, quiver: str | None = None, **params) -> Report:
    """Run a suite, passing along only the parameters it accepts."""
    if (name, None) in _SUITES:
        fn = _SUITES[(name, None)]
        target = fn
    else:
        fn = _SUITES[(name, quiver or "A2")]
        target = _TARGETS.get(name, fn)
    accepted = inspect.signature(target).parameters
    return fn(**{k: v for k, v in params.items() if k in accepted and k != "quiver"})
