"""Text and machine rendering of verdicts."""

from __future__ import annotations

import json

from semnet import CountMode, Direction, check_suite, render_json, render_text
from semnet.corpus import build_t1, build_t3
from semnet.properties import check_surjective_in


def test_render_text_t3_forward_full():
    verdicts = check_suite(build_t3(), Direction.FORWARD, CountMode.FULL)
    text = render_text(verdicts)
    lines = text.splitlines()
    assert lines[0] == "FUNCTIONAL from={X} to={Y} mode=full : FAILS"
    assert lines[1] == ("  witness: {X=x1} -> [{X=x1, Y=y1}, {X=x1, Y=y2}]"
                        " (multiple-outcomes)")
    assert "TOTAL from={X} to={Y} mode=full : FAILS" in lines
    assert "  witness: {X=x2} -> [] (no-outcome)" in lines
    assert text.endswith("\n")


def test_render_text_t1_suite():
    verdicts = check_suite(build_t1())
    text = render_text(verdicts)
    assert text.count(": HOLDS") == 6
    assert "SURJECTIVE_IN(A) from={A} to={A} mode=projected : HOLDS" in text


def test_render_text_empty():
    assert render_text([]) == ""


def test_render_json_schema():
    verdicts = check_suite(build_t3(), Direction.FORWARD, CountMode.PROJECTED)
    out = render_json("t3", "forward", "projected", verdicts)
    assert out.endswith("\n")
    doc = json.loads(out)
    assert sorted(doc) == ["direction", "mode", "network", "verdicts"]
    assert doc["network"] == "t3"
    assert doc["direction"] == "forward"
    assert doc["mode"] == "projected"
    for verdict in doc["verdicts"]:
        assert sorted(verdict) == [
            "from", "holds", "instances_checked", "param", "property",
            "to", "witnesses"]
        for witness in verdict["witnesses"]:
            assert sorted(witness) == ["anchor", "evidence", "note"]
    by_prop = {v["property"]: v for v in doc["verdicts"]}
    assert by_prop["functional"]["holds"] is False
    assert by_prop["functional"]["param"] is None
    assert by_prop["surjective_in"]["param"] == "Y"
    w = by_prop["total"]["witnesses"][0]
    assert w == {"anchor": {"X": "x2"}, "evidence": [], "note": "no-outcome"}


def test_render_json_is_byte_stable():
    net = build_t3()
    first = render_json("t3", "forward", "full",
                        check_suite(net, Direction.FORWARD, CountMode.FULL))
    second = render_json("t3", "forward", "full",
                         check_suite(net, Direction.FORWARD, CountMode.FULL))
    assert first == second
    assert "\n  " in first  # 2-space indentation


def test_render_json_single_verdict():
    v = check_surjective_in(build_t1(), "A")
    doc = json.loads(render_json("t1", "forward", "projected", [v]))
    assert len(doc["verdicts"]) == 1
    assert doc["verdicts"][0]["property"] == "surjective_in"
