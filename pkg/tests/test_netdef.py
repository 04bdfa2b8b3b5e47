"""Grammar, diagnostics, and round-trip behaviour of the .semnet format."""

from __future__ import annotations

import random
import string
from pathlib import Path

import pytest

from semnet import Instance, ParseFailure, parse, serialize
from semnet.corpus import all_networks

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

T2_TEXT = """\
net t2
set X = x1 x2
set Y = y1 y2
rel f in X out Y
row x1 y1
row x2 y1
end
data X
"""


def _codes(text):
    with pytest.raises(ParseFailure) as info:
        parse(text)
    return [e.code for e in info.value.errors], info.value.errors


def test_parse_t2():
    doc = parse(T2_TEXT)
    net = doc.network
    assert net.name == "t2"
    assert [vs.id for vs in net.sets] == ["X", "Y"]
    assert net.sets[0].values == ("x1", "x2")
    assert len(net.relations) == 1
    rel = net.relations[0]
    assert rel.in_sets == ("X",) and rel.out_sets == ("Y",)
    assert rel.rows == (("x1", "y1"), ("x2", "y1"))
    assert net.data_selection == frozenset({"X"})


def test_source_spans():
    doc = parse(T2_TEXT)
    assert doc.source_spans["net:t2"] == (1, 1)
    assert doc.source_spans["set:X"][0] == 2
    assert doc.source_spans["rel:f"][0] == 4


def test_comments_blank_lines_and_crlf():
    text = "# header\r\nnet n\r\n\r\nset A = a1 a2  # trailing comment\r\ndata A\r\n"
    net = parse(text).network
    assert net.name == "n"
    assert net.sets[0].values == ("a1", "a2")


def test_quoted_values_and_escapes():
    text = 'net n\nset A = "c#4" "a b" "q\\"uote" "back\\\\slash"\ndata A\n'
    net = parse(text).network
    assert net.sets[0].values == ("c#4", "a b", 'q"uote', "back\\slash")


def test_serialize_quotes_only_when_needed():
    text = 'net n\nset A = plain "c#4" "two words"\ndata A\n'
    net = parse(text).network
    out = serialize(net)
    assert 'set A = plain "c#4" "two words"' in out
    assert parse(out).network == net


def test_omitted_data_defaults_to_sources():
    text = Path(CORPUS / "t4.semnet").read_text(encoding="utf-8")
    assert "data" not in text
    net = parse(text).network
    assert net.data_selection == frozenset({"X"})


def test_bare_data_line_is_empty_selection():
    text = "net n\nset A = a\ndata\n"
    net = parse(text).network
    assert net.data_selection == frozenset()
    assert "data\n" in serialize(net)


def test_row_arity_error_carries_line():
    text = "net n\nset A = a\nset B = b\nrel f in A out B\nrow a\nend\ndata A\n"
    codes, errors = _codes(text)
    assert codes == ["ROW_ARITY"]
    assert errors[0].line == 5


def test_error_catalogue():
    cases = {
        "set A = a\nnet n\ndata A\n": "NET_NOT_FIRST",
        "set A = a\n": "MISSING_NET",
        "net n\nnet m\n": "DUPLICATE_NET",
        "net n\nwobble A\n": "UNKNOWN_STATEMENT",
        "net n extra\n": "TRAILING_TOKENS",
        "net\n": "MISSING_IDENTIFIER",
        "net 9bad\n": "BAD_IDENTIFIER",
        "net n\nset A a\n": "MISSING_EQUALS",
        "net n\nset A =\n": "MISSING_VALUES",
        "net n\nset A = a=b\n": "BAD_VALUE",
        "net n\nset A = a\nrel f out A\nend\n": "MISSING_IN",
        "net n\nset A = a\nrel f in A\nend\n": "MISSING_OUT",
        "net n\nrow a\n": "STRAY_ROW",
        "net n\nend\n": "STRAY_END",
        "net n\nset A = a\nset B = b\nrel f in A out B\n": "UNTERMINATED_REL",
        "net n\nset A = a\ndata A\ndata A\n": "DUPLICATE_DATA",
        "net n\nset A = a\nset A = b\ndata A\n": "DUPLICATE_ID",
        "net n\nset A = a a\ndata A\n": "DUPLICATE_VALUE",
        "net n\nset A = a\nrel f in A out Z\nend\ndata A\n": "UNKNOWN_SET",
        "net n\nset A = a\nset B = b\nrel f in A out B\nrow a z\nend\ndata A\n":
            "UNKNOWN_VALUE",
        "net n\nset A = a\nset B = b\nrel f in A out B\nrow a b\nrow a b\nend\ndata A\n":
            "DUPLICATE_ROW",
        "net n\nset A = a\ndata A A\n": "DUPLICATE_DATA_SET",
        'net n\nset A = "broken\ndata A\n': "UNTERMINATED_STRING",
        'net n\nset A = "bad\\x"\ndata A\n': "BAD_ESCAPE",
    }
    for text, expected in cases.items():
        codes, errors = _codes(text)
        assert expected in codes, (text, codes)
        assert all(e.line >= 1 and e.column >= 1 for e in errors)


def test_errors_are_collected_not_first_only():
    text = "net n\nset A = a a\nset A = b\nrel f in A out Z\nend\ndata A\n"
    codes, _ = _codes(text)
    assert "DUPLICATE_VALUE" in codes
    assert "DUPLICATE_ID" in codes
    assert "UNKNOWN_SET" in codes


def test_parse_error_str_format():
    _, errors = _codes("net n extra\n")
    text = str(errors[0])
    line, column, code = text.split(":")[0], text.split(":")[1], text.split(":")[2]
    assert line == "1" and column.isdigit()
    assert code.strip() == "TRAILING_TOKENS"


def test_round_trip_corpus_files():
    for path in sorted(CORPUS.glob("*.semnet")):
        first = parse(path.read_text(encoding="utf-8")).network
        text = serialize(first)
        second = parse(text).network
        assert first == second, path.name
        assert serialize(second) == text, path.name


def test_round_trip_builders():
    for name, net in all_networks().items():
        assert parse(serialize(net)).network == net, name


def test_serialize_rejects_unserialisable_networks():
    from semnet import Network, ValueSet
    with pytest.raises(ValueError):
        serialize(Network("n", (ValueSet("A", ("a",)),), (), {"MISSING"}))
    with pytest.raises(ValueError):
        serialize(Network("n", (ValueSet("A", ("bad\nline",)),), (), {"A"}))


def _random_text(rng: random.Random) -> str:
    pieces = ["net", "set", "rel", "row", "end", "data", "in", "out", "=",
              "n", "A", "B", "x1", '"x', '"x"', "#c", "\\", "9", "-", "_",
              "\n", " ", "\t", "\r\n"]
    return "".join(rng.choice(pieces) for _ in range(rng.randrange(0, 60)))


def test_fuzz_parse_never_crashes():
    rng = random.Random(20260814)
    for _ in range(300):
        text = _random_text(rng)
        try:
            doc = parse(text)
        except ParseFailure as failure:
            assert failure.errors
            assert all(e.line >= 1 for e in failure.errors)
        else:
            # anything accepted must survive a round trip
            assert parse(serialize(doc.network)).network == doc.network


def test_parse_is_deterministic():
    first = _codes("net n\nset A = a a\nwobble\n")[0]
    second = _codes("net n\nset A = a a\nwobble\n")[0]
    assert first == second
