import pytest
from hypothesis import given

from cy2stab.braids import (
    BraidWord,
    NormalForm,
    WordError,
    expand_a1hat,
    exponent_sum,
    is_admissible,
    normalize,
    parse_word,
)
from cy2stab.psl2 import word_matrix

from strategies import words


def nf_text(text, quiver):
    return normalize(parse_word(text, quiver)).text()


def test_parse_examples():
    w = parse_word("s2 s1", "a2")
    assert [(g.tag, g.exponent) for g in w.letters] == [("2", 1), ("1", 1)]
    assert parse_word("s1^-1 s1", "A2").letters == ()
    w = parse_word("s[3] s[0]^2", "a1hat")
    assert [(g.tag, g.exponent) for g in w.letters] == [(3, 1), (0, 2)]


@pytest.mark.parametrize("bad", ["s3", "s[1]", "t", "s1^0", "s1^", "g^x"])
def test_parse_rejects(bad):
    with pytest.raises(WordError):
        parse_word(bad, "a2")


def test_parse_rejects_wrong_quiver():
    with pytest.raises(WordError):
        parse_word("s1", "a1hat")
    with pytest.raises(WordError):
        parse_word("s1", "d4")


@pytest.mark.parametrize(
    "text, quiver, expected",
    [
        ("s2 s1", "A2", "g"),
        ("s1^-1", "A2", "g^-1 s2"),
        ("", "A2", "g^0"),
        ("s1 sX", "A2", "g"),
        ("sX s2", "A2", "g"),
        ("s2 s1 s2 s1 s2 s1", "A2", "g^3"),
        ("s[1] s[0]", "A1hat", "g"),
        ("s[1]^-1", "A1hat", "g^-1 s[2]"),
        ("s[0]", "A1hat", "s[0]"),
        ("", "A1hat", "g^0"),
    ],
)
def test_normalize_examples(text, quiver, expected):
    assert nf_text(text, quiver) == expected


def test_exponent_sums():
    assert exponent_sum(parse_word("s2 s1", "A2")) == 2
    assert exponent_sum(normalize(parse_word("s1^-1", "A2"))) == -1
    assert exponent_sum(parse_word("s2 s1 s2 s1 s2 s1", "A2")) == 6


def test_inadmissible_bodies_rejected():
    with pytest.raises(WordError):
        NormalForm("A2", 0, (("2", 1), ("1", 1)))
    with pytest.raises(WordError):
        NormalForm("A1hat", 0, (3, 2))
    assert is_admissible(NormalForm("A1hat", 0, (2, 3, 0)))


@given(words("A2"))
def test_a2_normal_form_is_the_same_braid(w):
    nf = normalize(w)
    assert word_matrix(nf) == word_matrix(w)
    assert exponent_sum(nf) == exponent_sum(w)
    assert normalize(nf.word()) == nf


@given(words("A1hat"))
def test_a1hat_normal_form_is_the_same_element(w):
    nf = normalize(w)
    assert expand_a1hat(nf) == expand_a1hat(w)
    assert normalize(nf.word()) == nf


@given(words("A2", 6), words("A2", 6))
def test_normalize_is_multiplicative(u, v):
    a = normalize(normalize(u).word() * normalize(v).word())
    assert a == normalize(u * v)


@given(words("A1hat", 8))
def test_inverse(w):
    assert normalize(w * w.inverse()) == NormalForm("A1hat", 0, ())


def test_text_round_trip():
    w = BraidWord.of("A1hat", [(-2, 1), ("g", -3), (5, 2)])
    assert parse_word(w.text(), "a1hat") == w
