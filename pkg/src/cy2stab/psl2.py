"""PSL2(Z) images of twist words, points of P^1(Z), odd continued fractions, Farey adjacency."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .braids import GAMMA, BraidWord, Generator, NormalForm, Quiver


class InfinityPointError(ValueError):
    """The point [1:0] has no finite continued fraction."""


@dataclass(frozen=True)
class ProjMatrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self.rows()} is not 1")
        first = next(x for x in (self.a, self.b, self.c, self.d) if x)
        if first < 0:
            for f in "abcd":
                object.__setattr__(self, f, -getattr(self, f))

    @classmethod
    def identity(cls) -> "ProjMatrix":
        return cls(1, 0, 0, 1)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __matmul__(self, o: "ProjMatrix") -> "ProjMatrix":
        return ProjMatrix(
            self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d,
        )

    def inverse(self) -> "ProjMatrix":
        return ProjMatrix(self.d, -self.b, -self.c, self.a)

    def __pow__(self, n: int) -> "ProjMatrix":
        base = self if n >= 0 else self.inverse()
        out = ProjMatrix.identity()
        for _ in range(abs(n)):
            out = out @ base
        return out

    def apply(self, v: tuple[int, int]) -> tuple[int, int]:
        return (self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1])

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


@dataclass(frozen=True)
class ProjPoint:
    a: int
    c: int

    def __post_init__(self) -> None:
        a, c = self.a, self.c
        if a == 0 and c == 0:
            raise ValueError("[0:0] is not a point")
        g = gcd(a, c)
        a, c = a // g, c // g
        if c < 0 or (c == 0 and a < 0):
            a, c = -a, -c
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "c", c)

    @classmethod
    def parse(cls, text: str) -> "ProjPoint":
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")) or body.count(":") != 1:
            raise ValueError(f"bad point {text!r}")
        a, c = body[1:-1].split(":")
        return cls(int(a), int(c))

    def vector(self) -> tuple[int, int]:
        return (self.a, self.c)

    def __str__(self) -> str:
        return f"[{self.a}:{self.c}]"


_A2_GEN = {
    "1": ProjMatrix(1, 1, 0, 1),
    "2": ProjMatrix(1, 0, -1, 1),
}
_A2_GEN[GAMMA] = _A2_GEN["2"] @ _A2_GEN["1"]
_A2_GEN["X"] = _A2_GEN[GAMMA] @ _A2_GEN["1"] @ _A2_GEN[GAMMA].inverse()


def a1hat_sigma(k: int) -> ProjMatrix:
    return ProjMatrix(2 * k + 1, -2 * k * k, 2, -2 * k + 1)


def gen_matrix(g: Generator) -> ProjMatrix:
    if g.quiver == "A2":
        m = _A2_GEN[g.tag]  # type: ignore[index]
    elif g.tag == GAMMA:
        m = ProjMatrix(1, 2, 0, 1)
    else:
        m = a1hat_sigma(g.tag)  # type: ignore[arg-type]
    return m ** g.exponent


def word_matrix(w: BraidWord | NormalForm) -> ProjMatrix:
    if isinstance(w, NormalForm):
        w = w.word()
    out = ProjMatrix.identity()
    for g in w.letters:
        out = out @ gen_matrix(g)
    return out


def act(m: ProjMatrix, p: ProjPoint) -> ProjPoint:
    return ProjPoint(*m.apply(p.vector()))


def cf_value(terms: list[int]) -> Fraction:
    val = Fraction(terms[-1])
    for n in reversed(terms[:-1]):
        val = n + 1 / val
    return val


def cf_odd(p: ProjPoint) -> list[int]:
    if p.c == 0:
        raise InfinityPointError("[1:0] has no continued fraction")
    a, c = p.a, p.c
    terms = []
    while c:
        q, r = divmod(a, c)
        terms.append(q)
        a, c = c, r
    if len(terms) % 2 == 0:
        # the last quotient of a floor expansion of length >= 2 is >= 2
        last = terms.pop()
        terms += [last - 1, 1]
    return terms


def word_of_point(p: ProjPoint) -> BraidWord:
    """A2 word s1^n0 s2^-n1 s1^n2 ... taking P2 = [0:1] to p."""
    terms = cf_odd(p)
    pairs = [("1" if i % 2 == 0 else "2", n if i % 2 == 0 else -n) for i, n in enumerate(terms)]
    return BraidWord.of("A2", [(t, e) for t, e in pairs if e])


def farey_adjacent(p: ProjPoint, q: ProjPoint) -> bool:
    return abs(p.a * q.c - q.a * p.c) == 1


def det(p: ProjPoint, q: ProjPoint) -> int:
    return p.a * q.c - q.a * p.c


def sin2_angle(m: ProjMatrix, u: tuple[int, int], v: tuple[int, int]) -> Fraction:
    """Squared sine of the angle between the lines M u and M v, exactly."""
    mu, mv = m.apply(u), m.apply(v)
    d = mu[0] * mv[1] - mu[1] * mv[0]
    return Fraction(d * d, (mu[0] ** 2 + mu[1] ** 2) * (mv[0] ** 2 + mv[1] ** 2))


# Base objects and their points.
A2_POINTS = {"P1": ProjPoint(1, 0), "P2": ProjPoint(0, 1), "X": ProjPoint(1, -1), "X'": ProjPoint(1, 1)}


def a1hat_point(k: int) -> ProjPoint:
    return ProjPoint(k, 1)


def base_point(quiver: Quiver, obj: str) -> ProjPoint:
    if quiver == "A2":
        if obj not in A2_POINTS:
            raise ValueError(f"unknown A2 object {obj!r}")
        return A2_POINTS[obj]
    if obj == "Pinf":
        return ProjPoint(1, 0)
    return a1hat_point(parse_a1hat_object(obj))


def parse_a1hat_object(obj: str) -> int:
    if not obj.startswith("P"):
        raise ValueError(f"unknown A1hat object {obj!r}")
    try:
        return int(obj[1:])
    except ValueError:
        raise ValueError(f"unknown A1hat object {obj!r}") from None


def point_of(w: BraidWord | NormalForm, base: str) -> ProjPoint:
    return act(word_matrix(w), base_point(w.quiver, base))
