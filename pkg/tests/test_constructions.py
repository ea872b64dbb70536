"""Constructed certificates: every emitted decomposition verifies, reaches its
certified bound, and never overshoots the exact oracle."""

import pytest

from stanley_lab import (
    BudgetExceededError,
    InputError,
    StanleySpace,
    decompose_layer,
    decompose_power_general,
    decompose_power_tree,
    decompose_s_mod_power,
    lower_sdepth_power,
    sdepth_exact,
    verify,
)
from stanley_lab.bounds import module_for
from stanley_lab.graphs import Graph, parse_graph, preset


def checked(dec):
    report = verify(dec)
    assert report.valid, (report.failure, report.witness)
    return report


def test_layer_single_edge():
    dec = decompose_layer(preset("path:2"), 1)
    report = checked(dec)
    assert report.sdepth == 1
    assert len(dec.spaces) == 2


def test_layer_two_edges_k0():
    dec = decompose_layer(parse_graph("path:2+path:2"), 0)
    report = checked(dec)
    assert report.sdepth == 2


def test_layer_triangle():
    dec = decompose_layer(preset("cycle:3"), 1)
    report = checked(dec)
    assert report.sdepth >= 0


def test_layer_zero_module_is_empty():
    dec = decompose_layer(Graph.make(2, []), 1)
    assert dec.spaces == ()


def test_layer_handles_isolated_vertices():
    graph = Graph.make(4, [(1, 2)])
    dec = decompose_layer(graph, 1)
    report = checked(dec)
    assert report.sdepth >= graph.bipartite_component_count()


def test_layer_meets_bound_on_mixed_graph():
    graph = parse_graph("cycle:3+path:3")
    for k in (0, 1, 2):
        dec = decompose_layer(graph, k)
        report = checked(dec)
        assert report.sdepth >= graph.bipartite_component_count()


def test_s_mod_power_single_edge():
    dec = decompose_s_mod_power(preset("path:2"), 2)
    report = checked(dec)
    assert report.sdepth == 1


def test_s_mod_power_path():
    graph = preset("path:3")
    dec = decompose_s_mod_power(graph, 2)
    report = checked(dec)
    assert report.sdepth >= 1
    oracle = sdepth_exact(module_for(graph, 2, "s-mod-power"))
    assert oracle.exact and report.sdepth <= oracle.value


def test_s_mod_power_triangle():
    dec = decompose_s_mod_power(preset("cycle:3"), 1)
    report = checked(dec)
    assert report.sdepth >= 0


def test_s_mod_power_space_count_is_sum_of_layers():
    graph = preset("path:3")
    layers = [decompose_layer(graph, j) for j in range(3)]
    stacked = decompose_s_mod_power(graph, 3)
    assert len(stacked.spaces) == sum(len(l.spaces) for l in layers)


def test_tree_power_principal():
    dec = decompose_power_tree(preset("path:2"), 3)
    assert dec.spaces == (StanleySpace((3, 3), frozenset({1, 2})),)
    assert checked(dec).sdepth == 2


def test_tree_power_path():
    graph = preset("path:3")
    dec = decompose_power_tree(graph, 2)
    report = checked(dec)
    assert report.sdepth >= 2
    oracle = sdepth_exact(module_for(graph, 2, "power"))
    assert oracle.exact and report.sdepth <= oracle.value


def test_tree_power_star():
    dec = decompose_power_tree(preset("star:3"), 2)
    assert checked(dec).sdepth >= 2


def test_tree_power_rejects_non_trees():
    with pytest.raises(InputError):
        decompose_power_tree(preset("cycle:4"), 1)
    with pytest.raises(InputError):
        decompose_power_tree(parse_graph("path:2+path:2"), 1)
    with pytest.raises(InputError):
        decompose_power_tree(preset("path:3"), 0)


def test_power_general_triangle_plus_edge():
    graph = parse_graph("cycle:3+path:2")
    dec = decompose_power_general(graph, 1)
    report = checked(dec)
    assert report.sdepth >= 2  # p + 1 with p = 1


def test_power_general_connected_degenerates():
    dec = decompose_power_general(preset("cycle:3"), 2)
    report = checked(dec)
    assert report.sdepth >= 1


def test_power_general_path_plus_edge():
    graph = parse_graph("path:3+path:2")
    dec = decompose_power_general(graph, 2)
    report = checked(dec)
    assert report.sdepth >= 3  # tree base 2 plus one leftover bipartite piece


def test_power_general_matches_engine_bound():
    for spec, k in (
        ("cycle:3+path:2", 1),
        ("cycle:3+path:2", 2),
        ("path:3+path:2", 1),
        ("cycle:5", 1),
        ("star:3", 2),
        ("cycle:4+path:2", 2),
    ):
        graph = parse_graph(spec)
        dec = decompose_power_general(graph, k)
        report = checked(dec)
        assert report.sdepth >= lower_sdepth_power(graph, k), spec


def test_power_general_rejects_edgeless():
    with pytest.raises(InputError):
        decompose_power_general(Graph.make(3, []), 1)


def test_constructions_respect_exact_oracle():
    for spec, k, kind in (
        ("path:2", 1, "layer"),
        ("cycle:3", 1, "layer"),
        ("path:3", 2, "s-mod-power"),
        ("cycle:3+path:2", 1, "power"),
    ):
        graph = parse_graph(spec)
        if kind == "layer":
            dec = decompose_layer(graph, k)
        elif kind == "s-mod-power":
            dec = decompose_s_mod_power(graph, k)
        else:
            dec = decompose_power_general(graph, k)
        oracle = sdepth_exact(module_for(graph, k, kind))
        if oracle.exact:
            assert checked(dec).sdepth <= oracle.value


def test_budget_propagates():
    with pytest.raises(BudgetExceededError):
        decompose_power_tree(preset("path:5"), 2, budget=1)


def test_every_construction_meets_engine_bound_small_sweep():
    from stanley_lab.graphs import enumerate_labeled_graphs

    for n in range(1, 5):
        for graph in enumerate_labeled_graphs(n):
            p = graph.bipartite_component_count()
            for k in (0, 1, 2):
                dec = decompose_layer(graph, k)
                if dec.spaces:
                    assert checked(dec).sdepth >= p, (graph, k)
            for k in (1, 2):
                dec = decompose_s_mod_power(graph, k)
                assert checked(dec).sdepth >= p, (graph, k)
                if graph.has_edges():
                    dec = decompose_power_general(graph, k)
                    assert checked(dec).sdepth >= lower_sdepth_power(graph, k), (
                        graph,
                        k,
                    )
