"""Property checkers: frozen example verdicts, witnesses, duality, and
agreement with the naive oracle."""

from __future__ import annotations

import pytest

from oracle import (
    oracle_functional,
    oracle_injective,
    oracle_minimal,
    oracle_surjective,
    oracle_surjective_in,
    oracle_total,
)
from semnet import (
    CountMode,
    Direction,
    Engine,
    Instance,
    PropertyKind,
    PropertyQuery,
    ScopeMismatchError,
    check_functional,
    check_injective,
    check_minimal,
    check_suite,
    check_surjective,
    check_surjective_in,
    check_total,
    sinks,
    sources,
)
from semnet.corpus import (
    all_networks,
    build_t1,
    build_t2,
    build_t3,
    build_t4,
    build_t4b,
)

ENGINES = (Engine.JOIN, Engine.BRUTEFORCE)


def test_property_query_param_invariant():
    with pytest.raises(ValueError):
        PropertyQuery(PropertyKind.FUNCTIONAL, ("X",), ("Y",),
                      CountMode.PROJECTED, param="Y")
    with pytest.raises(ValueError):
        PropertyQuery(PropertyKind.SURJECTIVE_IN, ("X",), ("Y",),
                      CountMode.PROJECTED)


@pytest.mark.parametrize("engine", ENGINES)
def test_functional_examples(engine):
    v = check_functional(build_t3(), {"X"}, {"Y"}, CountMode.FULL, engine=engine)
    assert not v.holds
    w = v.witnesses[0]
    assert w.anchor == Instance({"X": "x1"})
    assert w.evidence == (Instance({"X": "x1", "Y": "y1"}),
                          Instance({"X": "x1", "Y": "y2"}))
    assert w.note == "multiple-outcomes"
    assert v.instances_checked == 1

    for mode in CountMode:
        assert check_total(build_t1(), {"A"}, {"A"}, mode, engine=engine).holds
        assert check_functional(build_t1(), {"A"}, {"A"}, mode, engine=engine).holds
    assert check_functional(build_t2(), {"X"}, {"Y"}, CountMode.PROJECTED,
                            engine=engine).holds


@pytest.mark.parametrize("engine", ENGINES)
def test_total_examples(engine):
    v = check_total(build_t3(), {"X"}, {"Y"}, engine=engine)
    assert not v.holds
    assert v.witnesses[0].anchor == Instance({"X": "x2"})
    assert v.witnesses[0].evidence == ()
    assert v.witnesses[0].note == "no-outcome"
    assert v.instances_checked == 2

    v = check_total(build_t4b(), {"X", "M"}, {"Y"}, engine=engine)
    assert not v.holds
    assert v.witnesses[0].anchor == Instance({"X": "x1", "M": "m2"})

    assert check_total(build_t2(), {"X"}, {"Y"}, engine=engine).holds


@pytest.mark.parametrize("engine", ENGINES)
def test_injective_examples(engine):
    v = check_injective(build_t2(), {"X"}, {"Y"}, CountMode.PROJECTED,
                        engine=engine)
    assert not v.holds
    w = v.witnesses[0]
    assert w.anchor == Instance({"Y": "y1"})
    assert w.evidence == (Instance({"X": "x1", "Y": "y1"}),
                          Instance({"X": "x2", "Y": "y1"}))
    assert w.note == "multiple-preimages"

    for mode in CountMode:
        assert check_injective(build_t4(), {"X"}, {"Y"}, mode, engine=engine).holds


@pytest.mark.parametrize("engine", ENGINES)
def test_surjective_examples(engine):
    v = check_surjective(build_t2(), {"X"}, {"Y"}, engine=engine)
    assert not v.holds
    assert v.witnesses[0].anchor == Instance({"Y": "y2"})
    assert v.witnesses[0].note == "unreachable"
    assert check_surjective(build_t4(), {"X"}, {"Y"}, engine=engine).holds


@pytest.mark.parametrize("engine", ENGINES)
def test_surjective_in_examples(engine):
    v = check_surjective_in(build_t2(), "Y", engine=engine)
    assert not v.holds
    assert v.witnesses[0].anchor == Instance({"Y": "y2"})
    assert v.witnesses[0].note == "unrealizable-value"
    assert v.query.param == "Y"
    assert check_surjective_in(build_t2(), "X", engine=engine).holds
    assert check_surjective_in(build_t1(), "A", engine=engine).holds


@pytest.mark.parametrize("engine", ENGINES)
def test_minimal_mode_divergence(engine):
    projected = check_minimal(build_t2(), {"X"}, {"Y"}, CountMode.PROJECTED,
                              engine=engine)
    assert not projected.holds
    assert [w.note for w in projected.witnesses] == ["redundant:X"]
    assert projected.witnesses[0].anchor == Instance()

    full = check_minimal(build_t2(), {"X"}, {"Y"}, CountMode.FULL, engine=engine)
    assert full.holds
    assert full.witnesses == ()


def test_minimal_requires_nonempty_from():
    with pytest.raises(ScopeMismatchError):
        check_minimal(build_t2(), from_scope=())


@pytest.mark.parametrize("engine", ENGINES)
def test_suite_t4_forward_all_hold(engine):
    verdicts = check_suite(build_t4(), Direction.FORWARD, CountMode.PROJECTED,
                           engine=engine)
    assert [v.query.kind for v in verdicts] == [
        PropertyKind.FUNCTIONAL, PropertyKind.TOTAL, PropertyKind.INJECTIVE,
        PropertyKind.SURJECTIVE, PropertyKind.MINIMAL, PropertyKind.SURJECTIVE_IN]
    assert all(v.holds for v in verdicts)


@pytest.mark.parametrize("engine", ENGINES)
def test_suite_t3_forward_full(engine):
    verdicts = {v.query.kind: v for v in check_suite(
        build_t3(), Direction.FORWARD, CountMode.FULL, engine=engine)}
    assert not verdicts[PropertyKind.FUNCTIONAL].holds
    assert not verdicts[PropertyKind.TOTAL].holds
    assert verdicts[PropertyKind.INJECTIVE].holds
    assert verdicts[PropertyKind.SURJECTIVE].holds


def test_suite_t1_shape():
    verdicts = check_suite(build_t1())
    assert len(verdicts) == 6
    assert all(v.holds for v in verdicts)
    assert verdicts[-1].query.param == "A"


def test_suite_scopes_default_to_data_and_boundary():
    fig = all_networks()["fig1-mini"]
    fwd = check_suite(fig, Direction.FORWARD)
    assert fwd[0].query.from_scope == fig.set_order(fig.data_selection)
    assert fwd[0].query.to_scope == fig.set_order(sinks(fig))
    bwd = check_suite(fig, Direction.BACKWARD)
    assert bwd[0].query.to_scope == fig.set_order(sources(fig))
    inj = next(v for v in bwd if v.query.kind is PropertyKind.INJECTIVE)
    # recoverability: anchored on the sinks, counting source preimages
    assert inj.query.from_scope == fig.set_order(sources(fig))
    assert inj.query.to_scope == fig.set_order(sinks(fig))


def test_suite_explicit_scopes_apply_to_every_check():
    fig = all_networks()["fig1-mini"]
    verdicts = check_suite(fig, Direction.BACKWARD,
                           from_scope=("NoteheadPos",), to_scope=("MidiKey",))
    for v in verdicts:
        assert v.query.from_scope == ("NoteheadPos",)
        assert v.query.to_scope == ("MidiKey",)


def test_suite_requires_data_or_from():
    t2 = build_t2()
    bare = type(t2)(t2.name, t2.sets, t2.relations, frozenset())
    with pytest.raises(ScopeMismatchError):
        check_suite(bare)
    verdicts = check_suite(bare, from_scope=("X",))
    assert verdicts


def test_duality_on_corpus():
    for name, net in all_networks().items():
        d = net.set_order(net.data_selection)
        src = net.set_order(sources(net))
        snk = net.set_order(sinks(net))
        for a_scope, b_scope in ((d, snk), (d, src), (src, snk)):
            for mode in CountMode:
                assert check_injective(net, a_scope, b_scope, mode).holds == \
                    check_functional(net, b_scope, a_scope, mode).holds, \
                    (name, a_scope, b_scope, mode)
                assert check_surjective(net, a_scope, b_scope, mode).holds == \
                    check_total(net, b_scope, a_scope, mode).holds, \
                    (name, a_scope, b_scope, mode)


def test_full_implies_projected_for_upper_bound_properties():
    for name, net in all_networks().items():
        d = net.set_order(net.data_selection)
        snk = net.set_order(sinks(net))
        for checker in (check_functional, check_injective):
            if checker(net, d, snk, CountMode.FULL).holds:
                assert checker(net, d, snk, CountMode.PROJECTED).holds, name


def test_surjective_implies_every_parameter():
    for name, net in all_networks().items():
        snk = net.set_order(sinks(net))
        if check_surjective(net, to_scope=snk).holds:
            for param in snk:
                assert check_surjective_in(net, param).holds, (name, param)


def test_checkers_match_oracle_on_toy_nets():
    for net in (build_t1(), build_t2(), build_t3(), build_t4(), build_t4b()):
        d = net.set_order(net.data_selection)
        snk = net.set_order(sinks(net))
        for mode in CountMode:
            assert check_functional(net, d, snk, mode).holds == \
                oracle_functional(net, d, snk, mode.value)
            assert check_injective(net, d, snk, mode).holds == \
                oracle_injective(net, d, snk, mode.value)
            assert check_minimal(net, d, snk, mode).holds == \
                oracle_minimal(net, d, snk, mode.value)
        assert check_total(net, d, snk).holds == oracle_total(net, d)
        assert check_surjective(net, d, snk).holds == oracle_surjective(net, snk)
        for param in snk:
            assert check_surjective_in(net, param).holds == \
                oracle_surjective_in(net, param)


def test_verdicts_are_deterministic():
    fig = all_networks()["fig1-mini"]
    for engine in ENGINES:
        first = check_suite(fig, Direction.BACKWARD, CountMode.PROJECTED,
                            engine=engine)
        second = check_suite(fig, Direction.BACKWARD, CountMode.PROJECTED,
                             engine=engine)
        assert first == second


def test_instances_checked_counts_anchors():
    t2 = build_t2()
    # both x-anchors examined, no early exit
    assert check_functional(t2, {"X"}, {"Y"}).instances_checked == 2
    # fails on the first anchor in lexicographic order
    assert check_injective(t2, {"X"}, {"Y"}).instances_checked == 1
    # minimality examines (Q, i) pairs: one Q, both anchors, no separation
    assert check_minimal(t2, {"X"}, {"Y"},
                         CountMode.PROJECTED).instances_checked == 2
