"""Smoke tests for the teamlogic extension module."""

import pytest

import teamlogic as tl


def test_normalize_round_trip():
    assert tl.normalize("bsml", "neg (p | (q & NE))") == "neg (p | (q & NE))"
    assert tl.normalize("pldep", "dep(q,p; r)") == "dep(p,q; r)"


def test_profile_violation():
    with pytest.raises(tl.ProfileViolation):
        tl.normalize("pl", "NE")
    with pytest.raises(tl.FormulaParseError):
        tl.normalize("pl", "p &")


def test_supports_and_antisupports():
    assert tl.supports("plne", "p", "{1,0}", "(p & NE) | (neg p & NE)")
    assert not tl.supports("plne", "p", "{}", "NE")
    assert tl.antisupports("plne", "p", "{}", "NE")


def test_denote_ground_closure():
    assert tl.denote("plne", "p", "NE") == ["{0}", "{1}", "{0,1}"]
    assert tl.ground("plne", "p", "(p & NE)") == "{1}"
    flags = tl.closure("plne", "p", "(p & NE)")
    assert flags["convex"] and flags["union_closed"]
    assert not flags["downward_closed"] and not flags["flat"]


def test_classify():
    v = tl.classify("plne", "p", "p", "(p & NE) | (neg p & NE)")
    assert v["bot_i"] and v["strongbot_i"] and not v["ground_i"]


def test_transforms():
    assert tl.nnf("pl", "neg (p | q)") == "(neg p & neg q)"
    assert tl.etnorm("plne", "neg NE") == "bot"
    assert tl.flatten("pldep", "con(q)") == "neg bot"


def test_equivalent():
    assert tl.equivalent("plne", "p", "bot", "neg NE")["result"]
    v = tl.equivalent("plne", "p", "neg bot", "neg neg NE")
    assert not v["result"]
    assert v["witness"] == "{}"


def test_burgess_certificates():
    for logic, phi, psi in [
        ("plnegd", "p", "(neg p & q)"),
        ("plne", "p", "neg p"),
        ("pldep", "p", "neg p"),
        ("nestar", "p", "p"),
        ("hs", "p", "neg (p hand top)"),
    ]:
        r = tl.burgess(logic, phi, psi)
        assert r["cert_support"] and r["cert_dual"], (logic, r)


def test_burgess_refusal():
    with pytest.raises(tl.RefusalError):
        tl.burgess("plne", "p", "(neg p & q)")


def test_random_formula_deterministic():
    a = tl.random_formula("bsmli", "p,q", 3, 42)
    b = tl.random_formula("bsmli", "p,q", 3, 42)
    assert a == b
