import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings

from cy2stab.automata import run
from cy2stab.braids import NormalForm, normalize, parse_word
from cy2stab.psl2 import ProjPoint
from cy2stab.stability import (
    SQRT2,
    ChargeError,
    TypeACharge,
    a1hat_mass,
    admissible_bodies,
    charge_from_delta,
    delta_a1hat,
    eta,
    gromov,
    limit_slope,
    linearity_check_a1hat,
    linearity_check_a2,
    mass_of_object,
    masses_of_semistables,
    normalization_scale,
    normalize_charge,
    phi_membership,
    pi_map,
    tessellation_triangles,
    translate_masses,
    triangle_is_farey,
)

from strategies import a1hat_charges, a2_charges, words

STD = TypeACharge.make("A2", (1, 0), (Fraction(-1, 2), Fraction(1, 2)))


def test_charge_validation():
    with pytest.raises(ChargeError):
        TypeACharge.make("A2", (1, 0), (0, -1))
    with pytest.raises(ChargeError):
        TypeACharge.make("A2", (1, 0), (-1, 0))
    with pytest.raises(ChargeError):
        TypeACharge.make("A1hat", 1, -1)
    with pytest.raises(ChargeError):
        TypeACharge.make("A1hat", 1, Fraction(-1, 2))  # omega = (1 - n)/n, n = 2
    assert TypeACharge.make("A2", (1, 0), (2, 0)).degenerate()
    assert not TypeACharge.make("A1hat", 1, 1j).degenerate()


def test_phases():
    ph = TypeACharge.make("A2", (1, 0), (0, 1)).phases()
    assert ph["P1"] == 0 and ph["P2"] == pytest.approx(0.5) and ph["X"] == pytest.approx(0.25)


def test_eta_examples():
    assert eta(ProjPoint(1, 0)) == (0, 1, 1)
    assert eta(ProjPoint(1, -1)) == (1, 1, 0)
    assert eta(ProjPoint(1, 1)) == (1, 1, 2)


def test_pi_examples():
    assert pi_map(ProjPoint(1, 0)) == pytest.approx((0, 1 / SQRT2, 1 / SQRT2))
    v = pi_map(STD)
    assert sum(v) == pytest.approx(SQRT2)
    assert phi_membership(v) == "central-triangle"


def test_membership_examples():
    assert phi_membership(tuple(t / SQRT2 for t in (0, 1, 1))) == "boundary-arc"
    assert phi_membership(tuple(t * SQRT2 / 3 for t in (1, 1, 1))) == "central-triangle"
    assert phi_membership((1, 1, 1)) == "outside"
    assert phi_membership((0.1, 0.1, 0.1)) == "outside"


def test_normalize_charge_example():
    c = TypeACharge.make("A2", (1, 0), (Fraction(-1, 2), Fraction(math.sqrt(3) / 2)))
    # x = y = z = 1/2 and |eta| = sqrt 2 at all three vertices
    assert normalize_charge(c) == pytest.approx(1 / (1.5 * SQRT2))


@given(a2_charges())
def test_gromov_solves_the_triangle_system(c):
    g = gromov(c)
    m = masses_of_semistables(c)
    assert min(g.as_tuple()) >= 0
    assert g.y + g.z == pytest.approx(m["P1"])
    assert g.x + g.z == pytest.approx(m["P2"])
    assert g.x + g.y == pytest.approx(m["X"])


@given(a2_charges(degenerate=True))
def test_degenerate_charges_have_a_zero_coordinate(c):
    assert c.degenerate()
    assert min(gromov(c).as_tuple()) == pytest.approx(0, abs=1e-12)


@settings(max_examples=30)
@given(a2_charges(), words("A2", 8))
def test_a2_linearity(c, w):
    nf = normalize(w)
    assert linearity_check_a2(c, [(nf, s) for s in ("P1", "P2", "X")]) <= 1e-9


@given(a2_charges(degenerate=True), words("A2", 6))
def test_a2_linearity_degenerate(c, w):
    nf = normalize(w)
    assert linearity_check_a2(c, [(nf, "P1"), (nf, "X")]) <= 1e-9


def test_linearity_p1_is_definitional():
    g = gromov(STD)
    assert mass_of_object(STD, NormalForm("A2", 0, ()), "P1") == pytest.approx(g.y + g.z)


@settings(max_examples=30)
@given(a2_charges(), words("A2", 6))
def test_pi_of_translates(c, w):
    nf = normalize(w)
    v = pi_map(c, nf)
    s = normalization_scale(gromov(c), None) if nf.body == () and nf.gamma % 3 == 0 else None
    masses = translate_masses(c, nf)
    ratio = [a / b for a, b in zip(v, masses)]
    assert max(ratio) == pytest.approx(min(ratio))
    assert math.sqrt(sum(t * t for t in v)) < 1
    assert phi_membership(v, 1e-9) not in ("outside", "boundary-arc")
    if s is not None:
        assert ratio[0] == pytest.approx(s)


def test_scaling_homogeneity():
    c = STD
    k = 3
    big = TypeACharge.make("A2", (k * c.z[0][0], k * c.z[0][1]), (k * c.z[1][0], k * c.z[1][1]))
    assert normalize_charge(big) == pytest.approx(normalize_charge(c) / k)
    assert pi_map(big) == pytest.approx(pi_map(c))


def test_tessellation():
    tris = tessellation_triangles(4)
    assert len(tris) == 1 + 3 + 6 + 12 + 24
    assert tris[0][1] == (ProjPoint(1, 0), ProjPoint(0, 1), ProjPoint(1, -1))
    assert all(triangle_is_farey(t) for _, t in tris)
    assert len(admissible_bodies("A1hat", 2, range(-1, 2))) == 1 + 3 + 7  # pairs with a - b = 1 are excluded


def test_limit_slopes():
    r = limit_slope(STD, "P1", "P2")
    assert r.slope == pytest.approx(1.0)
    assert limit_slope(STD, "P1", "P1").slope == pytest.approx(0.0)
    c = TypeACharge.make("A1hat", 1.0, 0.3 + 1j)
    assert limit_slope(c, "P0", "P1").slope == pytest.approx(2 * a1hat_mass(c, 0))


def test_delta():
    assert delta_a1hat(TypeACharge.make("A1hat", 1, 1)) == pytest.approx(0.5)
    assert delta_a1hat(TypeACharge.make("A1hat", 1, 1j)) == pytest.approx(1 / (1 + 1j))
    d = 0.3 - 0.2j
    assert delta_a1hat(charge_from_delta(d)) == pytest.approx(d)


@settings(max_examples=20)
@given(a1hat_charges())
def test_a1hat_linearity_on_pk(c):
    # boundary terms of the summation by parts only cancel in the limit
    for k in range(-3, 4):
        r20 = linearity_check_a1hat(c, NormalForm("A1hat", 0, ()), f"P{k}", window=20)
        r200 = linearity_check_a1hat(c, NormalForm("A1hat", 0, ()), f"P{k}", window=200)
        assert r200.error <= r200.tail_bound
        assert r200.error < r20.error


@settings(max_examples=10)
@given(a1hat_charges())
def test_a1hat_tail_bound_dominates(c):
    nf = normalize(parse_word("s[2]", "a1hat"))
    for n in (50, 200):
        r = linearity_check_a1hat(c, nf, "P0", window=n)
        assert r.error <= r.tail_bound


@given(a1hat_charges())
def test_a1hat_gromov_non_negative(c):
    g = gromov(c, 8)
    assert min(g.values.values()) >= 0
