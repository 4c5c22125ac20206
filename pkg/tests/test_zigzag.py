import random

import pytest
from hypothesis import given, settings

from cy2stab import zigzag as zz
from cy2stab.braids import normalize, parse_word
from cy2stab.psl2 import point_of

from strategies import twist_words


def obj(q, name):
    return zz.base_object(q, name)


def test_algebra_tables():
    alg = zz.algebra("A2")
    n = alg.by_name
    assert alg.mul({n["a12"]: 1}, {n["a21"]: 1}) == {n["l1"]: 1}
    assert alg.mul({n["a12"]: 1}, {n["a12"]: 1}) == {}
    assert alg.mul({n["a12"]: 1}, {n["l2"]: 1}) == {}
    assert alg.graded_dims(1, 1) == {0: 1, 2: 1}
    assert alg.graded_dims(1, 2) == {1: 1}
    b = zz.algebra("A1hat")
    assert b.graded_dims(0, 1) == {1: 2}
    m = b.by_name
    assert b.mul({m["u"]: 1}, {m["v*"]: 1}) == {}


def test_hom_dims():
    assert zz.hom_dims(obj("A2", "P1"), obj("A2", "P1")) == {0: 1, 2: 1}
    assert zz.hom_dims(obj("A2", "P1"), obj("A2", "P2")) == {1: 1}
    assert sum(zz.hom_dims(obj("A2", "X"), obj("A2", "X")).values()) == 2
    assert zz.hom_total(obj("A1hat", "P0"), obj("A1hat", "P1")) == 2


def test_hombar_examples():
    assert zz.homBar(obj("A2", "P1"), obj("A2", "P1")) == 0
    assert zz.homBar(obj("A2", "P1"), obj("A2", "X")) == 1
    assert zz.homBar(obj("A1hat", "P0"), obj("A1hat", "P1")) == 2


def test_twist_examples():
    x = zz.twist(1, obj("A2", "P2"))
    assert zz.iso_shift(x, obj("A2", "X'")) == 0
    y = zz.twist(2, zz.twist(2, obj("A2", "X"), 1), -1)
    assert zz.iso_shift(y, obj("A2", "X")) == 0
    s2p0 = zz.apply_word(parse_word("s[2]", "a1hat"), obj("A1hat", "P0"))
    assert zz.occurrence_vector(s2p0) == {0: 5, 1: 8}


def test_gamma_moves_stable_objects():
    g = parse_word("g", "a2")
    assert zz.iso_shift(zz.apply_word(g, obj("A2", "P1")), obj("A2", "X")) is not None
    assert zz.iso_shift(zz.apply_word(g, obj("A2", "P1")), obj("A2", "P2")) is None
    for n in range(-2, 3):
        y = zz.apply_word(parse_word(f"g^{n}" if n else "", "a1hat"), obj("A1hat", "P1"))
        assert zz.occurrence_vector(y) == {0: abs(2 * n), 1: abs(2 * n + 1)}


def test_shift_iso_needs_more_than_counts():
    # s[0] P1 has the occurrence counts of P-1 but is a different object
    a = zz.apply_word(parse_word("s[0]", "a1hat"), obj("A1hat", "P1"))
    b = obj("A1hat", "P-1")
    assert zz.occurrence_vector(a) == zz.occurrence_vector(b)
    assert zz.iso_shift(a, b) is None


def test_minimize_cone_of_identity():
    p = obj("A2", "P1")
    h = zz._HomComplex(p, p)
    cone = zz.cone_of(h, 0, {0: 1})
    assert len(cone) == 2
    assert len(zz.minimize(cone)) == 0


def test_rz_example():
    x = zz.apply_word(parse_word("s1 s2^-1 s1^2", "a2"), obj("A2", "P2"))
    assert zz.occurrence_vector(x) == {1: 5, 2: 3}


def test_k_class():
    assert zz.k_class(obj("A2", "P1")) == {1: 1, 2: 0}
    assert zz.k_class(obj("A2", "X")) == {1: 1, 2: 1}


def test_braid_relation():
    for base in ("P1", "P2"):
        a = zz.apply_word(parse_word("s1 s2 s1", "a2"), obj("A2", base))
        b = zz.apply_word(parse_word("s2 s1 s2", "a2"), obj("A2", base))
        assert zz.iso_shift(a, b) is not None


def test_budget():
    with pytest.raises(zz.OracleBudgetExceeded):
        zz.apply_word(parse_word("s[3] s[-2] s[3]", "a1hat"), obj("A1hat", "P0"), budget=20)


def test_json_round_trip():
    x = zz.apply_word(parse_word("s1 s2^-1", "a2"), obj("A2", "X"))
    y = zz.from_json(zz.to_json(x))
    zz.check_complex(y)
    assert zz.iso_shift(x, y) == 0


@settings(max_examples=25)
@given(twist_words("A2", 7))
def test_a2_twists_are_complexes(w):
    x = zz.apply_word(w, obj("A2", "P1"))
    zz.check_complex(x)
    assert zz.is_minimal(x)
    assert zz.is_spherical(x)
    p = point_of(w, "P1")
    assert zz.occurrence_vector(x) == {1: abs(p.a), 2: abs(p.c)}


@settings(max_examples=20)
@given(twist_words("A2", 5), twist_words("A2", 5))
def test_cy2_symmetry(u, v):
    x = zz.apply_word(u, obj("A2", "P1"))
    y = zz.apply_word(v, obj("A2", "X"))
    assert zz.hom_total(x, y) == zz.hom_total(y, x)


@settings(max_examples=20)
@given(twist_words("A2", 6))
def test_normalized_word_gives_same_object(w):
    x = zz.apply_word(w, obj("A2", "P2"))
    y = zz.apply_word(normalize(w), obj("A2", "P2"))
    assert zz.iso_shift(x, y, seed=random.Random(0).randint(0, 99)) is not None


@settings(max_examples=15)
@given(twist_words("A1hat", 4))
def test_a1hat_rz(w):
    x = zz.apply_word(w, obj("A1hat", "P0"))
    zz.check_complex(x)
    p = point_of(w, "P0")
    assert zz.occurrence_vector(x) == {0: abs(p.a - p.c), 1: abs(p.a)}


def test_minimize_preserves_homs():
    raw = zz._twist_up(1, zz._twist_up(2, obj("A2", "P1")))
    small = zz.minimize(raw)
    assert len(small) < len(raw)
    for v in ("P1", "P2"):
        assert zz.hom_dims(raw, obj("A2", v)) == zz.hom_dims(small, obj("A2", v))
    assert zz.k_class(raw) == zz.k_class(small)
