"""Closed-form bounds and verdict reports."""

import pytest

from stanley_lab import (
    InputError,
    analytic_spread_edge,
    conjecture_check_s_mod,
    lower_sdepth_power,
    lower_sdepth_quotient_layers,
    lower_sdepth_s_mod_power,
    question_experiment,
    stanley_verdict,
)
from stanley_lab.bounds import EVIDENCE_FOR, HOLDS, KIND_LAYER, KIND_POWER, KIND_S_MOD
from stanley_lab.graphs import Graph, parse_graph, preset


def test_analytic_spread():
    assert analytic_spread_edge(preset("cycle:3")) == 3
    assert analytic_spread_edge(preset("path:2")) == 1
    assert analytic_spread_edge(Graph.make(2, [])) == 0


def test_quotient_bounds_are_p():
    mix = parse_graph("cycle:3+path:3")
    assert lower_sdepth_quotient_layers(mix) == 1
    assert lower_sdepth_s_mod_power(mix) == 1
    forest = parse_graph("path:2+path:3")
    assert lower_sdepth_quotient_layers(forest) == 2
    assert lower_sdepth_quotient_layers(preset("cycle:3")) == 0


def test_power_bound():
    assert lower_sdepth_power(preset("cycle:5"), 1) == 1
    assert lower_sdepth_power(preset("path:3"), 2) == 2
    assert lower_sdepth_power(parse_graph("cycle:3+path:2"), 1) == 2
    # connected bipartite non-tree: only the general floor is claimed
    assert lower_sdepth_power(preset("cycle:4"), 1) == 1
    # a tree component on top of a cycle still reaches p + 1
    mixed = parse_graph("cycle:4+path:2")
    assert lower_sdepth_power(mixed, 2) == mixed.bipartite_component_count() + 1


def test_power_bound_rejects_edgeless():
    with pytest.raises(InputError):
        lower_sdepth_power(Graph.make(3, []), 1)
    with pytest.raises(InputError):
        lower_sdepth_power(preset("path:3"), 0)


def test_stanley_verdict_quotient_large_power():
    report = stanley_verdict(KIND_S_MOD, preset("cycle:3"), 2)
    assert report.verdict == HOLDS
    assert report.oracle["depth"] == 0


def test_stanley_verdict_power():
    report = stanley_verdict(KIND_POWER, preset("path:3"), 2)
    assert report.verdict == HOLDS
    assert report.oracle["depth"] == 2
    assert report.bound == 2


def test_stanley_verdict_layer():
    report = stanley_verdict(KIND_LAYER, preset("path:2"), 1)
    assert report.verdict == HOLDS
    assert report.bound == 1


def test_conjecture_check():
    for spec, k in (("cycle:4", 2), ("cycle:3", 1), ("path:3", 3)):
        report = conjecture_check_s_mod(parse_graph(spec), k)
        assert report.verdict == HOLDS
    report = conjecture_check_s_mod(preset("cycle:4"), 2, budget=200_000)
    assert report.verdict == HOLDS
    assert report.oracle["sdepth"] >= report.oracle["target"]


def test_question_experiment():
    report = question_experiment(preset("cycle:4"), 1)
    assert report.verdict == EVIDENCE_FOR
    assert report.oracle["sdepth"] >= 2
    report = question_experiment(preset("path:4"), 2)
    assert report.verdict == EVIDENCE_FOR


def test_question_preconditions():
    with pytest.raises(InputError):
        question_experiment(preset("cycle:3"), 1)
    with pytest.raises(InputError):
        question_experiment(parse_graph("path:2+path:2"), 1)
    with pytest.raises(InputError):
        question_experiment(Graph.make(2, []), 1)


def test_reports_are_serializable():
    report = stanley_verdict(KIND_S_MOD, preset("path:3"), 2)
    obj = report.to_json()
    assert obj["claim"] == "stanley-inequality"
    assert obj["verdict"] == HOLDS
    assert "graph" in obj["instance"]
