"""Braid words for the A2 and affine A1 twist groups, and their admissible writings.

A2 words live in B3 with generators s1, s2 and the derived letters
sX = g s1 g^-1 and g = s2 s1.  A1hat words live in the free group F2 with
letters s[k] (s[2k] = g^k s[0] g^-k, s[2k+1] = g^k s[1] g^-k) and g = s[1] s[0].

Every word has a unique writing g^n * body in which the body uses only
positive twist letters and never contains a contractible pair.  For A2 the
contractible pairs are s2 s1, s1 sX, sX s2; for A1hat they are s[i] s[i-1].
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Literal, Sequence, Union

Quiver = Literal["A2", "A1hat"]
QUIVERS: tuple[Quiver, ...] = ("A2", "A1hat")

GAMMA = "g"
A2_TAGS = ("1", "2", "X")
Tag = Union[str, int]

# cyclic order (..., X, 1, 2, X, ...): an admissible body only steps forward
_A2_NEXT = {"X": "1", "1": "2", "2": "X"}
_A2_PREV = {v: k for k, v in _A2_NEXT.items()}
# g s_t g^-1 = s_{conj(t)}
_A2_CONJ = {"1": "X", "X": "2", "2": "1"}
_A2_CONJ_INV = {v: k for k, v in _A2_CONJ.items()}


class WordError(ValueError):
    """Raised for malformed braid word text or letters."""


def check_quiver(quiver: str) -> Quiver:
    q = {"a2": "A2", "a1hat": "A1hat"}.get(quiver.lower())
    if q is None:
        raise WordError(f"unknown quiver {quiver!r}")
    return q  # type: ignore[return-value]


@dataclass(frozen=True)
class Generator:
    quiver: Quiver
    tag: Tag
    exponent: int = 1

    def __post_init__(self) -> None:
        if self.exponent == 0:
            raise WordError("zero exponent")
        if self.tag == GAMMA:
            return
        if self.quiver == "A2" and self.tag not in A2_TAGS:
            raise WordError(f"bad A2 tag {self.tag!r}")
        if self.quiver == "A1hat" and (isinstance(self.tag, bool) or not isinstance(self.tag, int)):
            raise WordError(f"bad A1hat tag {self.tag!r}")

    def text(self) -> str:
        if self.tag == GAMMA:
            base = "g"
        elif self.quiver == "A2":
            base = "s" + str(self.tag)
        else:
            base = f"s[{self.tag}]"
        return base if self.exponent == 1 else f"{base}^{self.exponent}"


def _merge(letters: Sequence[Generator]) -> tuple[Generator, ...]:
    out: list[Generator] = []
    for g in letters:
        if out and out[-1].tag == g.tag:
            e = out[-1].exponent + g.exponent
            out.pop()
            if e:
                out.append(Generator(g.quiver, g.tag, e))
        else:
            out.append(g)
    return tuple(out)


@dataclass(frozen=True)
class BraidWord:
    quiver: Quiver
    letters: tuple[Generator, ...] = ()

    @classmethod
    def of(cls, quiver: Quiver, pairs: Sequence[tuple[Tag, int]]) -> "BraidWord":
        return cls(quiver, _merge([Generator(quiver, t, e) for t, e in pairs]))

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", _merge(self.letters))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.quiver != self.quiver:
            raise WordError("quiver mismatch")
        return BraidWord(self.quiver, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.quiver, tuple(Generator(self.quiver, g.tag, -g.exponent) for g in reversed(self.letters)))

    def text(self) -> str:
        return " ".join(g.text() for g in self.letters)

    def __len__(self) -> int:
        return sum(abs(g.exponent) for g in self.letters)


_TOKEN = re.compile(r"^(?:s(?P<a2>[12X])|s\[(?P<k>[+-]?\d+)\]|(?P<g>g))(?:\^(?P<e>[+-]?\d+))?$")


def parse_word(text: str, quiver: str) -> BraidWord:
    q = check_quiver(quiver)
    letters = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if m is None:
            raise WordError(f"unknown token {tok!r}")
        e = int(m["e"]) if m["e"] is not None else 1
        if e == 0:
            raise WordError(f"malformed exponent in {tok!r}")
        if m["g"]:
            tag: Tag = GAMMA
        elif m["a2"]:
            if q != "A2":
                raise WordError(f"token {tok!r} is not an {q} letter")
            tag = m["a2"]
        else:
            if q != "A1hat":
                raise WordError(f"token {tok!r} is not an {q} letter")
            tag = int(m["k"])
        letters.append(Generator(q, tag, e))
    return BraidWord(q, tuple(letters))


@dataclass(frozen=True)
class NormalForm:
    """g^gamma * body.  A2 bodies are (tag, exponent) runs, A1hat bodies are indices."""

    quiver: Quiver
    gamma: int
    body: tuple

    def __post_init__(self) -> None:
        if not is_admissible(self):
            raise WordError(f"inadmissible body {self.body!r}")

    def letters(self) -> list[Tag]:
        """Body as a flat list of twist tags, left to right."""
        if self.quiver == "A2":
            return [t for t, m in self.body for _ in range(m)]
        return list(self.body)

    def word(self) -> BraidWord:
        pairs: list[tuple[Tag, int]] = [(GAMMA, self.gamma)] if self.gamma else []
        if self.quiver == "A2":
            pairs += list(self.body)
        else:
            pairs += [(k, 1) for k in self.body]
        return BraidWord.of(self.quiver, pairs)

    def text(self) -> str:
        return self.word().text() or "g^0"

    def body_length(self) -> int:
        return len(self.letters())


def is_admissible(nf: NormalForm) -> bool:
    if nf.quiver == "A2":
        tags = [t for t, m in nf.body]
        if any(m <= 0 for _, m in nf.body) or any(t not in A2_TAGS for t in tags):
            return False
        return all(_A2_NEXT[a] == b for a, b in zip(tags, tags[1:]))
    body = nf.body
    if any(isinstance(k, bool) or not isinstance(k, int) for k in body):
        return False
    return all(a - b != 1 for a, b in zip(body, body[1:]))


def _group(tags: list[str]) -> tuple[tuple[str, int], ...]:
    out: list[list] = []
    for t in tags:
        if out and out[-1][0] == t:
            out[-1][1] += 1
        else:
            out.append([t, 1])
    return tuple((t, m) for t, m in out)


def normalize_a2(w: BraidWord) -> NormalForm:
    if w.quiver != "A2":
        raise WordError("normalize_a2 needs an A2 word")
    n = 0
    body: list[str] = []

    def hoist(e: int) -> None:
        # body * g^e = g^e * (g^-e body g^e)
        nonlocal body, n
        table = _A2_CONJ_INV if e > 0 else _A2_CONJ
        for _ in range(abs(e)):
            body = [table[t] for t in body]
        n += e

    for g in w.letters:
        if g.tag == GAMMA:
            hoist(g.exponent)
            continue
        for _ in range(abs(g.exponent)):
            if g.exponent > 0:
                body.append(g.tag)  # type: ignore[arg-type]
                if len(body) >= 2 and body[-2] == _A2_NEXT[body[-1]]:
                    del body[-2:]
                    hoist(1)
            else:
                # s_t^-1 = s_prev(t) g^-1
                body.append(_A2_PREV[g.tag])  # type: ignore[index]
                if len(body) >= 2 and body[-2] == _A2_NEXT[body[-1]]:
                    del body[-2:]
                    hoist(1)
                hoist(-1)
    return NormalForm("A2", n, _group(body))


def normalize_a1hat(w: BraidWord) -> NormalForm:
    if w.quiver != "A1hat":
        raise WordError("normalize_a1hat needs an A1hat word")
    n = 0
    body: list[int] = []

    def hoist(e: int) -> None:
        # s_i g^e = g^e s_{i-2e}
        nonlocal body, n
        body = [k - 2 * e for k in body]
        n += e

    def push(k: int) -> None:
        body.append(k)
        if len(body) >= 2 and body[-2] - body[-1] == 1:
            del body[-2:]
            hoist(1)

    for g in w.letters:
        if g.tag == GAMMA:
            hoist(g.exponent)
            continue
        for _ in range(abs(g.exponent)):
            if g.exponent > 0:
                push(g.tag)  # type: ignore[arg-type]
            else:
                push(g.tag - 1)  # type: ignore[operator]
                hoist(-1)
    return NormalForm("A1hat", n, tuple(body))


def normalize(w: BraidWord) -> NormalForm:
    return normalize_a2(w) if w.quiver == "A2" else normalize_a1hat(w)


def exponent_sum(w: BraidWord | NormalForm) -> int:
    if w.quiver != "A2":
        raise WordError("exponent sum is only used for A2")
    if isinstance(w, NormalForm):
        w = w.word()
    return sum((2 if g.tag == GAMMA else 1) * g.exponent for g in w.letters)


def expand_a1hat(w: BraidWord | NormalForm) -> list[tuple[int, int]]:
    """Freely reduced word over s[0]^+-1, s[1]^+-1 as (index, sign) pairs."""
    if isinstance(w, NormalForm):
        w = w.word()
    out: list[tuple[int, int]] = []

    def emit(k: int, s: int) -> None:
        if out and out[-1] == (k, -s):
            out.pop()
        else:
            out.append((k, s))

    def gamma(e: int) -> None:
        for _ in range(abs(e)):
            if e > 0:
                emit(1, 1)
                emit(0, 1)
            else:
                emit(0, -1)
                emit(1, -1)

    for g in w.letters:
        if g.tag == GAMMA:
            gamma(g.exponent)
            continue
        k = g.tag
        j, r = divmod(k, 2)  # type: ignore[operator]
        for _ in range(abs(g.exponent)):
            gamma(j)
            emit(r, 1 if g.exponent > 0 else -1)
            gamma(-j)
    return out


def a2_twist_letters(w: BraidWord | NormalForm) -> list[tuple[str, int]]:
    """A2 word over s1^+-1, s2^+-1 (sX = s2 s1 s2^-1, g = s2 s1), unreduced."""
    if isinstance(w, NormalForm):
        w = w.word()
    expand = {"1": [("1", 1)], "2": [("2", 1)], "X": [("2", 1), ("1", 1), ("2", -1)], GAMMA: [("2", 1), ("1", 1)]}
    out: list[tuple[str, int]] = []
    for g in w.letters:
        seq = expand[g.tag]  # type: ignore[index]
        if g.exponent < 0:
            seq = [(t, -s) for t, s in reversed(seq)]
        out += seq * abs(g.exponent)
    return out
