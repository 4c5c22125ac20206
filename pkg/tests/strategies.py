"""Hypothesis strategies for words, points and charges."""

import cmath
import math
from fractions import Fraction

import hypothesis.strategies as st

from cy2stab.braids import GAMMA, BraidWord, Generator
from cy2stab.psl2 import ProjPoint
from cy2stab.stability import TypeACharge

exps = st.integers(-3, 3).filter(bool)


def letters(quiver, max_index=5):
    if quiver == "A2":
        tags = st.sampled_from(["1", "2", "X", GAMMA])
    else:
        tags = st.one_of(st.integers(-max_index, max_index), st.just(GAMMA))
    return st.builds(lambda t, e: Generator(quiver, t, e), tags, exps)


def words(quiver, max_size=12, max_index=5):
    return st.lists(letters(quiver, max_index), max_size=max_size).map(lambda ls: BraidWord(quiver, tuple(ls)))


def twist_words(quiver, max_size=8):
    tags = st.sampled_from(["1", "2"] if quiver == "A2" else [0, 1])
    gen = st.builds(lambda t, s: Generator(quiver, t, s), tags, st.sampled_from([1, -1]))
    return st.lists(gen, max_size=max_size).map(lambda ls: BraidWord(quiver, tuple(ls)))


points = st.tuples(st.integers(-40, 40), st.integers(-40, 40)).filter(lambda t: t != (0, 0)).map(lambda t: ProjPoint(*t))

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=24)


@st.composite
def a2_charges(draw, degenerate=False):
    a, b = draw(rationals), draw(rationals)
    if (a, b) == (0, 0):
        a = Fraction(1)
    if degenerate:
        t = draw(st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=12))
        sign = draw(st.sampled_from([1, -1]))
        if sign < 0 and t == 1:
            t = Fraction(2)
        return TypeACharge.make("A2", (a, b), (sign * t * a, sign * t * b))
    # rotate (a, b) by an angle strictly inside (0, pi)
    c, d = draw(rationals), draw(st.fractions(min_value=Fraction(1, 24), max_value=3, max_denominator=24))
    # (c, d) in the upper half plane, multiplied into the frame of (a, b)
    return TypeACharge.make("A2", (a, b), (a * c - b * d, a * d + b * c))


@st.composite
def a1hat_charges(draw):
    r = draw(st.floats(0.5, 2.0))
    th = draw(st.floats(0.05, 0.95)) * math.pi
    return TypeACharge.make("A1hat", 1.0, r * cmath.exp(1j * th))
