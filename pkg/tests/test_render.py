from prophopf.canonical import decode, encode
from prophopf.hterm import MU, Id
from prophopf.render import render
from prophopf.syntax import parse_term
from prophopf.words import word


def test_identity_is_straight_wires():
    assert render(Id(2)) == " |   |\n |   |\n |   |"


def test_mu_merges():
    assert render(MU).splitlines() == [" |   |", " \\___/", "   |"]


def test_decoded_word_splits_then_merges_per_block():
    lines = render(decode(encode((word(2, 1, 2),)))).splitlines()
    assert lines[:3] == ["   |", " /---\\", " |   |"]
    assert all(line.strip("| ") == "" for line in lines[3:])


def test_crossing_and_boxes():
    text = render(parse_term("P(1,1) . S x S"))
    assert "[S] [S]" in text
    assert "   X" in text.splitlines()


def test_deterministic():
    t = parse_term("delta . mu . (S x eta x eps) . (P(1,1) x eps)")
    assert render(t) == render(t)
