import pytest

import exporter
from errors import ParseError
from processor import Relator, diff_relators, merge_relators, process_relators, read_relator_text
from words import Alphabet


@pytest.fixture
def ab():
    return Alphabet(["a", "b", "c"])


def test_pipeline_reduces_drops_and_dedups(ab):
    relators = [
        Relator("r1", ab.parse("a b a^-1")),        # cyclically reduces to b
        Relator("r2", ab.parse("a a^-1")),          # identity, dropped
        Relator("r3", ab.parse("b^-1")),            # inverse of r1
        Relator("r4", ab.parse("b c")),
        Relator("r4", ab.parse("c^2")),             # duplicate label
        Relator("r5", ab.parse("c b")),             # rotation of r4
    ]
    out = process_relators(relators, ab)
    assert [(r.label, str(r.word)) for r in out] == [("r1", "b"), ("r4", "b c")]


def test_pipeline_skips_foreign_alphabet(ab):
    other = Alphabet(["a", "b"])
    out = process_relators([Relator("x", other.parse("a b"))], ab)
    assert out == []


def test_merge_keeps_existing_order(ab):
    existing = [Relator("r1", ab.parse("a b"))]
    merged = merge_relators(existing, [Relator("r2", ab.parse("b a")), Relator("r3", ab.parse("c"))], ab)
    assert [r.label for r in merged] == ["r1", "r3"]


def test_diff_relators(ab):
    actual = [Relator("x", ab.parse("a b")), Relator("y", ab.parse("c")), Relator("z", ab.parse("a"))]
    expected = [Relator("x", ab.parse("b a")), Relator("y", ab.parse("c^2")), Relator("w", ab.parse("b"))]
    diff = diff_relators(actual, expected)
    assert diff.missing == ["w"]
    assert diff.unexpected == ["z"]
    assert diff.mismatched == ["y"]
    assert not diff.is_empty
    assert diff_relators(actual, actual).is_empty


def test_read_relator_text_with_macros():
    text = "\n".join([
        "# comment",
        "generators: a, b",
        "relators: 2",
        "t := a b a^-1",
        "first: t^2 a b^-2 a^-1",
        "second: (a b)^3   # trailing comment",
    ])
    alphabet, relators = read_relator_text(text)
    assert alphabet.names == ("a", "b")
    assert [r.label for r in relators] == ["first", "second"]
    assert relators[0].word.is_identity()
    assert str(relators[1].word) == "a b a b a b"


def test_read_relator_text_errors():
    with pytest.raises(ParseError):
        read_relator_text("x: a")
    with pytest.raises(ParseError):
        read_relator_text("generators: a\nrelators: 2\nx: a")
    with pytest.raises(ParseError):
        read_relator_text("generators: a\njust words")
    with pytest.raises(ParseError):
        read_relator_text("generators: a", alphabet=Alphabet(["b"]))
    with pytest.raises(ParseError):
        read_relator_text("generators: a\nrelators: many")


def test_text_export_reads_back(wajnryb31):
    alphabet, relators = read_relator_text(exporter.presentation_to_text(wajnryb31))
    assert alphabet == wajnryb31.alphabet
    assert tuple(relators) == wajnryb31.relators
