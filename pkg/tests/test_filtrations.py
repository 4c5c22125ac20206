import pytest
from hypothesis import given, settings, strategies as st

from cy2stab import zigzag as zz
from cy2stab.automata import build_automaton, run
from cy2stab.braids import NormalForm, normalize
from cy2stab.filtrations import Factor, FactorSequence, check_geodesic_condition, heart_strata, oracle_factors, shifted
from cy2stab.stability import TypeACharge, mass_of_hn, masses_of_semistables
from cy2stab.suites import a2_normal_forms, geodesic_case

from strategies import a2_charges, twist_words

C = TypeACharge.make("A2", 1, complex(-1 / 3, 1))


def test_heart_strata_of_projectives():
    assert heart_strata(zz.base_object("A2", "P1")) == {0: {"P1": 1, "P2": 0, "X": 0, "X'": 0}}
    assert heart_strata(zz.base_object("A2", "X")) == {0: {"P1": 0, "P2": 0, "X": 1, "X'": 0}}


def test_heart_strata_rejects_a1hat():
    with pytest.raises(zz.OracleError):
        heart_strata(zz.base_object("A1hat", "P0"))


def test_oracle_factors_of_x_prime():
    # X' is an extension of P1 by P2, so a type-A charge splits it
    fs = oracle_factors(zz.base_object("A2", "X'"), C)
    assert fs.tags() == {"P1": 1, "P2": 1}
    assert [f.tag for f in fs.factors] == ["P2", "P1"]


def test_oracle_factors_need_nondegenerate_charge():
    deg = TypeACharge.make("A2", 1, -2)
    with pytest.raises(ValueError):
        oracle_factors(zz.base_object("A2", "P1"), deg)


@settings(max_examples=40)
@given(twist_words("A2", 6), st.sampled_from(["P1", "P2", "X"]), a2_charges())
def test_oracle_factors_match_automaton(w, start, c):
    x = zz.apply_word(w, zz.base_object("A2", start))
    fs = oracle_factors(x, c)
    v = run(normalize(w), start)
    assert dict(fs.tags()) == v.as_dict()
    assert fs.mass(masses_of_semistables(c)) == pytest.approx(mass_of_hn(c, v), rel=1e-12)
    phases = [f.phase for f in fs.factors]
    assert phases == sorted(phases, reverse=True)


def test_floor_ceil_and_shift():
    fs = FactorSequence((Factor("P2", 0.6, 0), Factor("P1", 0.2, -1)))
    assert (fs.floor(), fs.ceil()) == (0.2, 0.6)
    g = shifted(fs, 2)
    assert (g.floor(), g.ceil()) == (2.2, 2.6)
    assert [f.shift for f in g.factors] == [2, 1]


def test_unresolved_or_empty_sequences_raise():
    with pytest.raises(ValueError):
        FactorSequence(()).floor()
    with pytest.raises(ValueError):
        FactorSequence((Factor("P1", 0.1, None),)).ceil()


def test_geodesic_condition_toy():
    hi = FactorSequence((Factor("P2", 0.8, 0),))
    lo = FactorSequence((Factor("P1", 0.3, 0),))
    assert check_geodesic_condition([hi, lo], lambda j, i: 1)
    # out of order: allowed only when the extension group vanishes
    assert check_geodesic_condition([lo, hi], lambda j, i: 0)
    assert not check_geodesic_condition([lo, hi], lambda j, i: 1)


@pytest.mark.parametrize("letter", ["1", "2", "X"])
def test_geodesic_on_short_words(letter):
    c = TypeACharge.make("A2", 1, complex(-1 / 3, 1))
    for nf in a2_normal_forms(2, gammas=range(0, 3)):
        for s in ("P1", "P2", "X"):
            v = run(nf, s)
            if build_automaton("A2").edge(v.state, letter) is None:
                continue
            assert geodesic_case(nf, s, letter, c) == (True, True)
