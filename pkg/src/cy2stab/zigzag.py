"""Exact oracle: complexes of projectives over the graded zigzag algebra.

Conventions
-----------
* A generator (v, d) stands for P_v[-d].  Internal and homological shifts are
  identified, so a generator carries a single integer degree.
* Matrices are indexed [source][target].  An entry from generator a to b of a
  degree-n map lies in e_{v_a} A e_{v_b} in internal degree d_a + n - d_b.
* Algebra products are in path order: x * y means "x then y".  So "f then g"
  on complexes is the matrix product F @ G.
* The differential D is a degree-1 map with D @ D = 0.  On Hom(X, Y) we use
  dF = D_X @ F - (-1)^n F @ D_Y.

Coefficients are ints, promoted to Fraction only when dividing by a non-unit.
"""

from __future__ import annotations

import json
import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .braids import BraidWord, NormalForm, Quiver, a2_twist_letters, expand_a1hat

Elem = dict[int, object]  # basis id -> rational coefficient


class OracleError(RuntimeError):
    pass


class OracleBudgetExceeded(OracleError):
    """A complex grew past the caller's generator budget."""


# ---------------------------------------------------------------- algebra


@dataclass(frozen=True)
class ZigzagAlgebra:
    quiver: Quiver
    vertices: tuple[int, ...]
    names: tuple[str, ...]
    src: tuple[int, ...]
    tgt: tuple[int, ...]
    deg: tuple[int, ...]
    table: Mapping[tuple[int, int], tuple[tuple[int, int], ...]]
    by_name: Mapping[str, int] = field(default_factory=dict)
    # (source, target) -> basis ids
    spaces: Mapping[tuple[int, int], tuple[int, ...]] = field(default_factory=dict)

    def idem(self, v: int) -> int:
        return self.by_name[f"e{v}"]

    def mul(self, x: Elem, y: Elem) -> Elem:
        out: Elem = {}
        table = self.table
        for b1, c1 in x.items():
            for b2, c2 in y.items():
                for b, c in table.get((b1, b2), ()):
                    v = out.get(b, 0) + c * c1 * c2
                    if v:
                        out[b] = v
                    else:
                        out.pop(b, None)
        return out

    def graded_dims(self, v: int, w: int) -> dict[int, int]:
        out: dict[int, int] = defaultdict(int)
        for b in self.spaces.get((v, w), ()):
            out[self.deg[b]] += 1
        return dict(out)


def _build(quiver: Quiver, vertices, paths, products) -> ZigzagAlgebra:
    names, src, tgt, deg = [], [], [], []
    for v in vertices:
        names.append(f"e{v}"), src.append(v), tgt.append(v), deg.append(0)
    for name, s, t, d in paths:
        names.append(name), src.append(s), tgt.append(t), deg.append(d)
    idx = {n: i for i, n in enumerate(names)}
    table: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {}
    for i in range(len(names)):
        for j in range(len(names)):
            if tgt[i] != src[j]:
                continue
            if deg[i] == 0:
                table[(i, j)] = ((j, 1),)
            elif deg[j] == 0:
                table[(i, j)] = ((i, 1),)
    for (x, y), z in products.items():
        table[(idx[x], idx[y])] = ((idx[z], 1),)
    spaces: dict[tuple[int, int], list[int]] = defaultdict(list)
    for i in range(len(names)):
        spaces[(src[i], tgt[i])].append(i)
    return ZigzagAlgebra(
        quiver, tuple(vertices), tuple(names), tuple(src), tuple(tgt), tuple(deg), table, idx,
        {k: tuple(v) for k, v in spaces.items()},
    )


@lru_cache(maxsize=None)
def algebra(quiver: Quiver) -> ZigzagAlgebra:
    if quiver == "A2":
        paths = [("a12", 1, 2, 1), ("a21", 2, 1, 1), ("l1", 1, 1, 2), ("l2", 2, 2, 2)]
        products = {("a12", "a21"): "l1", ("a21", "a12"): "l2"}
        return _build("A2", (1, 2), paths, products)
    if quiver == "A1hat":
        # two arrows each way; only a return along the same edge survives
        paths = [("u", 0, 1, 1), ("v", 0, 1, 1), ("u*", 1, 0, 1), ("v*", 1, 0, 1), ("l0", 0, 0, 2), ("l1", 1, 1, 2)]
        products = {("u", "u*"): "l0", ("v", "v*"): "l0", ("u*", "u"): "l1", ("v*", "v"): "l1"}
        return _build("A1hat", (0, 1), paths, products)
    raise OracleError(f"unknown quiver {quiver!r}")


def _inv(c):
    if c == 1 or c == -1:
        return c
    return Fraction(1) / c


def _addto(target: Elem, x: Elem, scale=1) -> None:
    for b, c in x.items():
        v = target.get(b, 0) + scale * c
        if v:
            target[b] = v
        else:
            target.pop(b, None)


# ---------------------------------------------------------------- complexes


@dataclass
class DGComplex:
    """Generators plus a sparse differential rows[a][b] (entry from a to b)."""

    quiver: Quiver
    gens: dict[int, tuple[int, int]]
    rows: dict[int, dict[int, Elem]]
    cols: dict[int, set[int]]

    @classmethod
    def build(cls, quiver: Quiver, gens: list[tuple[int, int]], entries: Iterable[tuple[int, int, Elem]] = ()) -> "DGComplex":
        x = cls(quiver, dict(enumerate(gens)), {i: {} for i in range(len(gens))}, {i: set() for i in range(len(gens))})
        for a, b, e in entries:
            x.add(a, b, e)
        return x

    def add(self, a: int, b: int, e: Elem, scale=1) -> None:
        if not e:
            return
        row = self.rows[a]
        cur = row.get(b)
        if cur is None:
            cur = {}
            row[b] = cur
            self.cols[b].add(a)
        _addto(cur, e, scale)
        if not cur:
            del row[b]
            self.cols[b].discard(a)

    def __len__(self) -> int:
        return len(self.gens)

    def copy(self) -> "DGComplex":
        return DGComplex(
            self.quiver, dict(self.gens),
            {a: {b: dict(e) for b, e in r.items()} for a, r in self.rows.items()},
            {b: set(s) for b, s in self.cols.items()},
        )

    def entries(self) -> Iterable[tuple[int, int, Elem]]:
        for a, r in self.rows.items():
            for b, e in r.items():
                yield a, b, e

    def relabel(self) -> "DGComplex":
        order = sorted(self.gens, key=lambda a: (self.gens[a][1], self.gens[a][0], a))
        new = {a: i for i, a in enumerate(order)}
        return DGComplex.build(self.quiver, [self.gens[a] for a in order],
                               [(new[a], new[b], dict(e)) for a, b, e in self.entries()])

    def shift(self, s: int) -> "DGComplex":
        """X[s]: degrees drop by s, differential picks up (-1)^s."""
        sign = -1 if s % 2 else 1
        return DGComplex.build(self.quiver, [(v, d - s) for v, d in (self.gens[a] for a in sorted(self.gens))],
                               [(a, b, {k: sign * c for k, c in e.items()}) for a, b, e in self._indexed_entries()])

    def _indexed_entries(self):
        pos = {a: i for i, a in enumerate(sorted(self.gens))}
        for a, b, e in self.entries():
            yield pos[a], pos[b], e

    def generator_list(self) -> list[tuple[int, int]]:
        return [self.gens[a] for a in sorted(self.gens)]


def projective(quiver: Quiver, v: int, d: int = 0) -> DGComplex:
    if v not in algebra(quiver).vertices:
        raise OracleError(f"no vertex {v} in {quiver}")
    return DGComplex.build(quiver, [(v, d)])


def arrow_complex(quiver: Quiver, src: int, tgt: int, arrow: str) -> DGComplex:
    """P_src -> P_tgt along one arrow, both in degree 0."""
    alg = algebra(quiver)
    b = alg.by_name[arrow]
    if (alg.src[b], alg.tgt[b]) != (src, tgt):
        raise OracleError(f"{arrow} does not go from {src} to {tgt}")
    return DGComplex.build(quiver, [(src, 0), (tgt, 0)], [(0, 1, {b: 1})])


def check_complex(x: DGComplex) -> None:
    """Raise unless entries are homogeneous of the right degree and D @ D = 0."""
    alg = algebra(x.quiver)
    for a, b, e in x.entries():
        (va, da), (vb, db) = x.gens[a], x.gens[b]
        for k in e:
            if (alg.src[k], alg.tgt[k]) != (va, vb) or alg.deg[k] != da + 1 - db:
                raise OracleError(f"entry {a}->{b} has wrong shape {alg.names[k]}")
    for a, r in x.rows.items():
        acc: dict[int, Elem] = defaultdict(dict)
        for b, e in r.items():
            for c, f in x.rows[b].items():
                _addto(acc[c], alg.mul(e, f))
        if any(acc.values()):
            raise OracleError(f"D^2 != 0 at row {a}")


# ---------------------------------------------------------------- minimization


def _find_unit(x: DGComplex, a: int, alg: ZigzagAlgebra):
    va, da = x.gens[a]
    idem = alg.idem(va)
    for b, e in x.rows[a].items():
        vb, db = x.gens[b]
        if vb == va and db == da + 1 and idem in e:
            return b, e[idem]
    return None


def _eliminate(x: DGComplex, a: int, b: int, c, alg: ZigzagAlgebra) -> set[int]:
    inv = _inv(c)
    out_a = [(d, e) for d, e in x.rows[a].items() if d != b]
    in_b = [(g, x.rows[g][b]) for g in x.cols[b] if g != a]
    touched = set()
    for g, eg in in_b:
        for d, ed in out_a:
            x.add(g, d, alg.mul(eg, ed), -inv)
        touched.add(g)
    for z in (a, b):
        for d in list(x.rows[z]):
            x.cols[d].discard(z)
        for g in list(x.cols[z]):
            x.rows[g].pop(z, None)
        del x.rows[z], x.cols[z], x.gens[z]
    touched.discard(a)
    touched.discard(b)
    return touched


def minimize(x: DGComplex, budget: int | None = None) -> DGComplex:
    """Cancel every invertible (idempotent) entry by Gaussian elimination."""
    x = x.copy()
    alg = algebra(x.quiver)
    stack = list(x.gens)
    while stack:
        a = stack.pop()
        if a not in x.gens:
            continue
        hit = _find_unit(x, a, alg)
        if hit is None:
            continue
        b, c = hit
        stack.extend(_eliminate(x, a, b, c, alg))
    if budget is not None and len(x) > budget:
        raise OracleBudgetExceeded(f"minimal complex has {len(x)} generators")
    return x.relabel()


def is_minimal(x: DGComplex) -> bool:
    alg = algebra(x.quiver)
    return all(_find_unit(x, a, alg) is None for a in x.gens)


def occurrences(x: DGComplex, v: int) -> int:
    if not is_minimal(x):
        raise OracleError("occurrence counts need a minimal complex")
    return sum(1 for w, _ in x.gens.values() if w == v)


def occurrence_vector(x: DGComplex) -> dict[int, int]:
    return {v: occurrences(x, v) for v in algebra(x.quiver).vertices}


def k_class(x: DGComplex) -> dict[int, int]:
    out = {v: 0 for v in algebra(x.quiver).vertices}
    for v, d in x.gens.values():
        out[v] += -1 if d % 2 else 1
    return out


# ---------------------------------------------------------------- twists


def _twist_up(i: int, y: DGComplex) -> DGComplex:
    """Cone(Hom(P_i, Y) (x) P_i -> Y)."""
    alg = algebra(y.quiver)
    ei = alg.idem(i)
    basis: list[tuple[int, int]] = []  # (beta, b)
    index: dict[tuple[int, int], int] = {}
    for beta, (vb, db) in y.gens.items():
        for b in alg.spaces.get((i, vb), ()):
            index[(beta, b)] = len(basis)
            basis.append((beta, b))
    ny = sorted(y.gens)
    pos = {beta: len(basis) + k for k, beta in enumerate(ny)}
    gens = [(i, alg.deg[b] + y.gens[beta][1] - 1) for beta, b in basis] + [y.gens[beta] for beta in ny]
    out = DGComplex.build(y.quiver, gens)
    for f, (beta, b) in enumerate(basis):
        out.add(f, pos[beta], {b: 1})
        for delta, e in y.rows[beta].items():
            for k, c in alg.mul({b: 1}, e).items():
                out.add(f, index[(delta, k)], {ei: -c})
    for a, b, e in y.entries():
        out.add(pos[a], pos[b], e)
    return out


def _twist_down(i: int, y: DGComplex) -> DGComplex:
    """Cone(Y -> Hom(Y, P_i)^dual (x) P_i)[-1]."""
    alg = algebra(y.quiver)
    ei = alg.idem(i)
    basis: list[tuple[int, int]] = []
    index: dict[tuple[int, int], int] = {}
    for beta, (vb, db) in y.gens.items():
        for b in alg.spaces.get((vb, i), ()):
            index[(beta, b)] = len(basis)
            basis.append((beta, b))
    ny = sorted(y.gens)
    pos = {beta: k for k, beta in enumerate(ny)}
    off = len(ny)
    gens = [y.gens[beta] for beta in ny] + [(i, y.gens[beta][1] - alg.deg[b] + 1) for beta, b in basis]
    out = DGComplex.build(y.quiver, gens)
    for a, b, e in y.entries():
        out.add(pos[a], pos[b], e)
    for g, (beta, b) in enumerate(basis):
        out.add(pos[beta], off + g, {b: -1})
        # D_Y @ g = sum_h c_h h  gives  D_W[h*][g*] = c_h, negated by the shift
        for gamma in y.cols[beta]:
            for k, c in alg.mul(y.rows[gamma][beta], {b: 1}).items():
                out.add(off + index[(gamma, k)], off + g, {ei: -c})
    return out


def twist(i: int, x: DGComplex, direction: int = 1, budget: int | None = None) -> DGComplex:
    if direction not in (1, -1):
        raise OracleError("direction must be +1 or -1")
    if budget is not None and len(x) > budget:
        raise OracleBudgetExceeded(f"input has {len(x)} generators")
    raw = _twist_up(i, x) if direction == 1 else _twist_down(i, x)
    return minimize(raw, budget)


def twist_letters(w: BraidWord | NormalForm) -> list[tuple[int, int]]:
    """(vertex, sign) letters, leftmost first."""
    if w.quiver == "A2":
        return [(int(t), s) for t, s in a2_twist_letters(w)]
    return expand_a1hat(w)


def apply_word(w: BraidWord | NormalForm, x: DGComplex, budget: int | None = None) -> DGComplex:
    letters = twist_letters(w)
    if w.quiver == "A2":
        letters = _free_reduce(letters)
    x = minimize(x, budget)
    for v, s in reversed(letters):
        x = twist(v, x, s, budget)
    return x


def _free_reduce(letters: list[tuple[int, int]]) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    for v, s in letters:
        if out and out[-1] == (v, -s):
            out.pop()
        else:
            out.append((v, s))
    return out


# ---------------------------------------------------------------- base objects


@lru_cache(maxsize=None)
def _a1hat_base(k: int) -> DGComplex:
    j, r = divmod(k, 2)
    w = BraidWord.of("A1hat", [("g", j)]) if j else BraidWord("A1hat")
    return apply_word(w, projective("A1hat", r))


def base_object(quiver: Quiver, name: str) -> DGComplex:
    """P1, P2, X = (P2 -> P1), X' = (P1 -> P2) for A2; P<k> for A1hat."""
    if quiver == "A2":
        if name in ("P1", "P2"):
            return projective("A2", int(name[1]))
        if name == "X":
            return arrow_complex("A2", 2, 1, "a21")
        if name == "X'":
            return arrow_complex("A2", 1, 2, "a12")
        raise OracleError(f"unknown A2 object {name!r}")
    if not name.startswith("P"):
        raise OracleError(f"unknown A1hat object {name!r}")
    return _a1hat_base(int(name[1:])).copy()


# ---------------------------------------------------------------- hom complexes


class _HomComplex:
    def __init__(self, x: DGComplex, y: DGComplex):
        if x.quiver != y.quiver:
            raise OracleError("quiver mismatch")
        self.alg = alg = algebra(x.quiver)
        self.x, self.y = x, y
        self.basis: dict[int, list[tuple[int, int, int]]] = defaultdict(list)
        self.index: dict[tuple[int, int, int], tuple[int, int]] = {}
        for a, (va, da) in x.gens.items():
            for beta, (vb, db) in y.gens.items():
                for b in alg.spaces.get((va, vb), ()):
                    n = alg.deg[b] - da + db
                    self.index[(a, beta, b)] = (n, len(self.basis[n]))
                    self.basis[n].append((a, beta, b))

    def differential(self, n: int) -> list[dict[int, object]]:
        """Images of the degree-n basis as sparse vectors in degree n + 1."""
        alg, x, y = self.alg, self.x, self.y
        sign = -1 if n % 2 else 1
        out = []
        for a, beta, b in self.basis.get(n, ()):
            vec: dict[int, object] = {}
            for g in x.cols[a]:
                for k, c in alg.mul(x.rows[g][a], {b: 1}).items():
                    _acc(vec, self.index[(g, beta, k)][1], c)
            for d, e in y.rows[beta].items():
                for k, c in alg.mul({b: 1}, e).items():
                    _acc(vec, self.index[(a, d, k)][1], -sign * c)
            out.append(vec)
        return out

    def degrees(self) -> list[int]:
        return sorted(self.basis)


def _acc(vec: dict, k: int, c) -> None:
    v = vec.get(k, 0) + c
    if v:
        vec[k] = v
    else:
        vec.pop(k, None)


class _Echelon:
    """Incremental sparse row echelon form over Q, optionally tracking combinations."""

    def __init__(self) -> None:
        self.pivots: dict[int, tuple[dict, dict | None]] = {}

    def reduce(self, vec: dict, hist: dict | None = None) -> tuple[dict, dict | None]:
        vec = dict(vec)
        hist = dict(hist) if hist is not None else None
        while vec:
            col = min(vec)
            if col not in self.pivots:
                break
            pv, ph = self.pivots[col]
            f = vec[col] * _inv(pv[col])
            for k, c in pv.items():
                _acc(vec, k, -f * c)
            if hist is not None and ph is not None:
                for k, c in ph.items():
                    _acc(hist, k, -f * c)
        return vec, hist

    def add(self, vec: dict, hist: dict | None = None) -> tuple[dict, dict | None]:
        vec, hist = self.reduce(vec, hist)
        if vec:
            self.pivots[min(vec)] = (vec, hist)
        return vec, hist

    def rank(self) -> int:
        return len(self.pivots)


def _rank(vectors: list[dict]) -> int:
    ech = _Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank()


def hom_dims(x: DGComplex, y: DGComplex) -> dict[int, int]:
    """Graded dimensions of H^n Hom(X, Y), by exact rank computations."""
    h = _HomComplex(x, y)
    ranks = {n: _rank(h.differential(n)) for n in h.degrees()}
    out = {}
    for n in h.degrees():
        dim = len(h.basis[n]) - ranks[n] - ranks.get(n - 1, 0)
        if dim:
            out[n] = dim
    return out


def hom_total(x: DGComplex, y: DGComplex) -> int:
    return sum(hom_dims(x, y).values())


def _cocycle(h: _HomComplex, n: int, rng: random.Random) -> dict | None:
    """A degree-n cocycle whose class is a random nonzero combination, or None."""
    ech = _Echelon()
    kernel = []
    for i, v in enumerate(h.differential(n)):
        rest, hist = ech.add(v, {i: 1})
        if not rest:
            kernel.append(hist)
    image = _Echelon()
    for v in h.differential(n - 1):
        image.add(v)
    classes = []
    for k in kernel:
        r, _ = image.reduce(k)
        if r:
            image.add(k)
            classes.append(k)
    if not classes:
        return None
    out: dict = {}
    for k in classes:
        c = rng.randint(1, 97) if len(classes) > 1 else 1
        for i, v in k.items():
            _acc(out, i, c * v)
    return out


def cone_of(h: _HomComplex, n: int, coeffs: Mapping[int, object]) -> DGComplex:
    """Cone of the degree-n map X -> Y given in the hom basis, viewed as X -> Y[n]."""
    x, y = h.x, h.y.shift(n)
    xs, ys = sorted(h.x.gens), sorted(h.y.gens)
    px = {a: i for i, a in enumerate(xs)}
    py = {b: len(xs) + i for i, b in enumerate(ys)}
    gens = [(v, d - 1) for v, d in (h.x.gens[a] for a in xs)] + y.generator_list()
    out = DGComplex.build(x.quiver, gens)
    for a, b, e in h.x.entries():
        out.add(px[a], px[b], e, -1)
    for a, b, e in y.entries():
        out.add(len(xs) + a, len(xs) + b, e)
    for i, c in coeffs.items():
        a, beta, b = h.basis[n][i]
        out.add(px[a], py[beta], {b: c})
    return out


def iso_shift(x: DGComplex, y: DGComplex, seed: int = 0) -> int | None:
    """s with X = Y[s] if one exists (spherical inputs), else None."""
    x, y = minimize(x), minimize(y)
    if sorted(v for v, _ in x.gens.values()) != sorted(v for v, _ in y.gens.values()):
        return None
    if len(x) == 0:
        return 0
    h = _HomComplex(x, y)
    dims = hom_dims(x, y)
    if not dims:
        return None
    s = min(dims)
    f = _cocycle(h, s, random.Random(seed))
    if f is None:
        return None
    return s if len(minimize(cone_of(h, s, f))) == 0 else None


def is_spherical(x: DGComplex) -> bool:
    """Self-homs one-dimensional in two degrees two apart."""
    dims = hom_dims(x, x)
    degs = sorted(dims)
    return sorted(dims.values()) == [1, 1] and degs[1] - degs[0] == 2


def homBar(x: DGComplex, y: DGComplex, check: bool = True) -> int:
    """Total hom dimension, reduced by 2 when X and Y agree up to shift."""
    if check:
        for z in (x, y):
            if not is_spherical(z):
                raise OracleError("homBar needs spherical inputs")
    total = hom_total(x, y)
    if len(x) == len(y) and iso_shift(x, y) is not None:
        total -= 2
    return total


# ---------------------------------------------------------------- serialization


def to_json(x: DGComplex) -> str:
    alg = algebra(x.quiver)
    y = x.relabel()
    ents = [[a, b, [[alg.names[k], str(c)] for k, c in sorted(e.items())]] for a, b, e in sorted(y.entries(), key=lambda t: t[:2])]
    return json.dumps({"quiver": x.quiver, "generators": [list(g) for g in y.generator_list()], "differential": ents})


def from_json(text: str) -> DGComplex:
    doc = json.loads(text)
    alg = algebra(doc["quiver"])
    ents = []
    for a, b, terms in doc["differential"]:
        e = {}
        for name, c in terms:
            q = Fraction(c)
            e[alg.by_name[name]] = int(q) if q.denominator == 1 else q
        ents.append((a, b, e))
    return DGComplex.build(doc["quiver"], [tuple(g) for g in doc["generators"]], ents)
