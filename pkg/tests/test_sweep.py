"""Unit tests for family sweeps, persistence, and caching."""

import numpy as np
import pytest

from hyperstate.errors import SchemaError
from hyperstate.hypergraph import Hypergraph, canonical_edges
from hyperstate.squeezing import squeeze_report
from hyperstate.sweep import (
    CSV_HEADER,
    METRIC_NAMES,
    Family,
    cache_key,
    cached_sweep,
    complete_k_family,
    dminus1_family,
    evaluate_record,
    read_results,
    render_results,
    single_full_family,
    sweep_family,
    write_results,
)


def test_family_descriptors():
    assert dminus1_family(5).descriptor == "dminus1(d=5)"
    assert complete_k_family(6, 4).descriptor == "complete-k(d=6,k=4)"
    assert single_full_family(7).descriptor == "single-full(d=7)"


def test_family_validation():
    with pytest.raises(ValueError):
        Family("dplus1", 5)
    with pytest.raises(ValueError):
        Family("complete-k", 5)


def test_family_default_filters():
    assert dminus1_family(5).default_connectivity_filter
    assert not complete_k_family(5, 4).default_connectivity_filter
    assert not single_full_family(5).default_connectivity_filter


def test_sweep_counts_and_order():
    records, summary = sweep_family(dminus1_family(5))
    assert summary.count == len(records) == 26  # 31 subsets, 5 disconnected singletons
    assert records[0].edges == "0,1,2,3;0,1,2,4"
    unfiltered, _ = sweep_family(dminus1_family(5), connectivity_filter=False)
    assert len(unfiltered) == 31
    assert unfiltered[0].edges == "0,1,2,3"


def test_sweep_published_extrema_d5():
    _, summary = sweep_family(dminus1_family(5))
    s_p = summary.metrics["s_p"]
    assert s_p.max_value == pytest.approx(-0.0265, abs=1e-3)
    assert s_p.min_value == pytest.approx(-0.4968, abs=1e-3)
    assert s_p.argmax == ("0,1,2,3;0,1,2,4;0,1,3,4;0,2,3,4",)
    assert s_p.argmin == ("0,1,2,3;0,1,2,4;0,1,3,4",)


def test_summary_extrema_attained_by_listed_sets():
    records, summary = sweep_family(dminus1_family(5))
    by_edges = {r.edges: r for r in records}
    for name, metric in summary.metrics.items():
        for edges in metric.argmin:
            assert by_edges[edges].metrics[name] == metric.min_value
        for edges in metric.argmax:
            assert by_edges[edges].metrics[name] == metric.max_value


def test_family_enumeration_guard():
    from hyperstate.errors import GuardError

    with pytest.raises(GuardError):
        sweep_family(dminus1_family(32))  # C(32,31) = 32 candidate edges


def test_squeeze_extrema_range_over_squeezed_configs():
    # plain max of s_p over the d=5 family is positive (anti-squeezed), the
    # summary reports the extrema of the squeezed (negative) subpopulation
    records, summary = sweep_family(dminus1_family(5))
    plain_max = max(r.metrics["s_p"] for r in records)
    assert plain_max > 0
    assert summary.metrics["s_p"].max_value < 0


def test_constant_metric_keeps_all_ties():
    records, summary = sweep_family(dminus1_family(4), metrics=("var_n",))
    var_n = summary.metrics["var_n"]
    assert var_n.min_value == var_n.max_value == 21.25
    assert len(var_n.argmin) == len(records)
    assert var_n.argmin == var_n.argmax


def test_single_configuration_family_min_equals_max():
    _, summary = sweep_family(complete_k_family(5, 4))
    s_p = summary.metrics["s_p"]
    assert s_p.min_value == s_p.max_value == pytest.approx(-0.401, abs=1e-3)
    assert s_p.argmin == s_p.argmax


def test_record_metrics_match_squeeze_report():
    g = Hypergraph(4, [(0, 1, 2), (1, 2, 3)])
    record = evaluate_record(g)
    report = squeeze_report(g)
    assert record.metrics["s_p"] == report.s_p
    assert record.metrics["half_comm"] == report.half_comm
    assert set(record.metrics) == set(METRIC_NAMES)


def test_unknown_metric_rejected():
    with pytest.raises(ValueError):
        sweep_family(dminus1_family(4), metrics=("s_q",))


def test_empty_family_after_filter():
    with pytest.raises(ValueError):
        sweep_family(dminus1_family(2))  # singleton edges never cover both vertices


def test_write_read_round_trip(tmp_path):
    records, _ = sweep_family(dminus1_family(4))
    for fmt in ("csv", "json"):
        path = tmp_path / f"out.{fmt}"
        write_results(records, path)
        assert read_results(path) == records


def test_write_is_byte_stable(tmp_path):
    records, _ = sweep_family(dminus1_family(4))
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    write_results(records, first)
    write_results(records, second)
    assert first.read_bytes() == second.read_bytes()


def test_csv_header_schema(tmp_path):
    records, _ = sweep_family(dminus1_family(4))
    path = tmp_path / "out.csv"
    write_results(records, path)
    header = path.read_text().splitlines()[0]
    assert header == ",".join(CSV_HEADER)


def test_read_rejects_unknown_column(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("d,edges,s_p,s_n,var_p,var_n,half_comm,c_l1_phase,extra\n")
    with pytest.raises(SchemaError):
        read_results(path)


def test_read_rejects_unknown_json_key(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('[{"d": 4, "edges": "", "bogus": 1}]')
    with pytest.raises(SchemaError):
        read_results(path)


def test_read_rejects_unknown_extension(tmp_path):
    path = tmp_path / "out.txt"
    path.write_text("d,edges\n")
    with pytest.raises(SchemaError):
        read_results(path)


def test_cache_key_stability():
    family = dminus1_family(5)
    assert cache_key(family) == cache_key(family)
    assert cache_key(family) != cache_key(dminus1_family(6))
    assert cache_key(family) != cache_key(family, metrics=("s_p",))
    assert cache_key(family) != cache_key(family, connectivity_filter=False)
    assert cache_key(complete_k_family(5, 4)) != cache_key(complete_k_family(5, 3))


def test_cached_sweep_round_trip(tmp_path, monkeypatch):
    family = dminus1_family(4)
    records, summary = cached_sweep(family, cache_dir=tmp_path)
    cache_files = list(tmp_path.glob("*.json"))
    assert len(cache_files) == 1

    def boom(*args, **kwargs):
        raise AssertionError("sweep recomputed despite warm cache")

    import hyperstate.sweep as sweep_mod

    monkeypatch.setattr(sweep_mod, "sweep_family", boom)
    cached_records, cached_summary = cached_sweep(family, cache_dir=tmp_path)
    assert cached_records == records
    assert cached_summary.metrics["s_p"] == summary.metrics["s_p"]


def test_thread_count_does_not_change_output():
    family = dminus1_family(5)
    records_1, _ = sweep_family(family, threads=1)
    records_4, _ = sweep_family(family, threads=4)
    for fmt in ("csv", "json"):
        assert render_results(records_1, fmt) == render_results(records_4, fmt)


def test_complete_k_metrics_invariant_under_relabeling():
    from hyperstate.hypergraph import complete_k_graph

    base_graph = complete_k_graph(5, 4)
    perm = (4, 0, 3, 1, 2)
    relabeled_graph = Hypergraph(5, tuple(tuple(perm[v] for v in e) for e in base_graph.edges))
    assert relabeled_graph == base_graph  # the complete family maps to itself
    base = evaluate_record(base_graph)
    relabeled = evaluate_record(relabeled_graph)
    for name in METRIC_NAMES:
        assert relabeled.metrics[name] == base.metrics[name]


def test_family_value_multiset_invariant_under_relabeling():
    perm = (2, 0, 4, 1, 3)
    original, _ = sweep_family(dminus1_family(5))
    relabeled_values = []
    for record in original:
        edges = canonical_edges(
            tuple(tuple(perm[int(v)] for v in edge.split(",")) for edge in record.edges.split(";"))
        )
        relabeled_values.append(evaluate_record(Hypergraph(5, edges)).metrics["s_p"])
    original_values = [r.metrics["s_p"] for r in original]
    assert sorted(np.round(relabeled_values, 12)) == sorted(np.round(original_values, 12))
