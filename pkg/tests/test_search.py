import math

import pytest

from bowtie_spectra import families as fam
from bowtie_spectra.canon import canonical_form
from bowtie_spectra.graph import Graph, from_graph6, is_connected, to_graph6
from bowtie_spectra.search import (
    SearchError,
    children,
    deletable_edges,
    enumerate_connected,
    extremal_search,
    theorem_report,
)
from bowtie_spectra.spectral import spectral_radius
from bowtie_spectra.subgraph import is_theorem_free

from oracles import connected_classes_by_edges, labeled_connected_classes

# connected graphs by number of edges
KNOWN = {1: 1, 2: 1, 3: 3, 4: 5, 5: 12, 6: 30, 7: 79, 8: 227, 9: 710}


@pytest.mark.parametrize("m", range(1, 6))
def test_counts_match_labelled_brute_force(m):
    assert sum(1 for _ in enumerate_connected(m)) == labeled_connected_classes(m)


@pytest.mark.parametrize("m", range(1, 8))
def test_counts_match_atlas(m):
    assert sum(1 for _ in enumerate_connected(m)) == connected_classes_by_edges(m) == KNOWN[m]


def test_counts_up_to_nine():
    for m in (8, 9):
        assert sum(1 for _ in enumerate_connected(m)) == KNOWN[m]


def test_small_examples():
    three = {canonical_form(g) for g in enumerate_connected(3)}
    expected = {canonical_form(g) for g in (fam.make_complete(3), fam.make_path(4), fam.make_star(3))}
    assert three == expected
    assert [g.m for g in enumerate_connected(1)] == [1]


def test_stream_is_duplicate_free_and_valid():
    seen = set()
    for g in enumerate_connected(8):
        assert g.m == 8 and is_connected(g)
        c = canonical_form(g)
        assert c not in seen
        seen.add(c)
        assert g == c


def test_max_n_restricts_order():
    # 6-edge connected graphs on at most 5 vertices
    got = list(enumerate_connected(6, max_n=5))
    assert all(g.n <= 5 for g in got)
    assert len(got) == 30 - sum(1 for g in enumerate_connected(6) if g.n > 5)


def test_limit_enforced():
    with pytest.raises(SearchError):
        list(enumerate_connected(14))
    with pytest.raises(SearchError):
        list(enumerate_connected(0))


def test_parallel_matches_serial():
    a = [to_graph6(g) for g in enumerate_connected(8)]
    b = [to_graph6(g) for g in enumerate_connected(8, jobs=2)]
    assert a == b


def test_deletable_edges_of_path_and_cycle():
    p4 = fam.make_path(4)
    # only the two pendant edges; the middle one is a bridge between non-leaves
    assert sorted(deletable_edges(p4.adj)) == [(0, 1), (2, 3)]
    assert len(deletable_edges(fam.make_cycle(5).adj)) == 5


def test_children_are_canonical():
    for g in children(fam.make_cycle(4)):
        assert g.m == 5 and canonical_form(g) == g


def test_search_m9_book_unique():
    rep = extremal_search(9)
    book = canonical_form(fam.make_book(9)[0])
    assert rep.argmax == [to_graph6(book)]
    assert rep.book_is_unique_argmax
    assert abs(rep.rho_max - (1 + math.sqrt(33)) / 2) < 1e-9
    assert rep.bound_satisfied
    assert rep.counts["connected"] == 710


def test_search_report_invariants():
    for m in (5, 7, 9):
        rep = extremal_search(m)
        for s in rep.argmax:
            g = from_graph6(s)
            assert g.m == m and is_connected(g) and is_theorem_free(g)
            assert abs(spectral_radius(g).rho - rep.rho_max) < 1e-9
        if m % 2:
            assert rep.rho_max >= (1 + math.sqrt(4 * m - 3)) / 2 - 1e-9


def test_search_m7_records_true_winner():
    # K4 plus a pendant edge beats the 7-edge book
    rep = extremal_search(7)
    assert rep.argmax == ["DJ{"]
    assert not rep.book_is_unique_argmax
    assert rep.rho_max > (1 + math.sqrt(25)) / 2
    assert not rep.bound_satisfied
    only_bowtie = extremal_search(7, patterns=("h33",))
    assert only_bowtie.argmax == ["DJ{"]


def test_search_m5_everything_free():
    rep = extremal_search(5)
    assert rep.counts["free"] == rep.counts["connected"] == 12


def test_search_deterministic():
    a = extremal_search(8, patterns=("h33", "h43")).to_json()
    b = extremal_search(8, patterns=("h33", "h43")).to_json()
    assert a == b
    assert "wall_time" not in a


def test_induced_mode_differs_at_m9():
    rep = extremal_search(9, induced=True)
    # K5 minus an edge is induced-bowtie free but contains a bowtie
    assert rep.argmax == ["D^{"]
    assert rep.counts["free"] > rep.counts["free_other_mode"]


def test_cache_round_trip(tmp_path):
    first = extremal_search(7, cache_dir=tmp_path)
    files = sorted(p.name for p in tmp_path.iterdir())
    assert files == ["m7_n8_h33-h43_subgraph.g6", "m7_n8_h33-h43_subgraph.json"]
    lines = (tmp_path / files[0]).read_text().split()
    assert lines == sorted(lines) and len(lines) == first.counts["free"]
    second = extremal_search(7, cache_dir=tmp_path)
    assert first.to_json() == second.to_json()


def test_no_patterns_allows_everything():
    rep = extremal_search(6, patterns=())
    assert rep.counts["free"] == 30
    # K4 is the densest 6-edge graph
    assert rep.argmax == [to_graph6(canonical_form(fam.make_complete(4)))]


def test_theorem_report():
    rep = theorem_report(9)
    (ann,) = rep.annotations
    assert ann["neighborhood"]["class"] == "one-star"
    assert ann["decomposition"]["e_W"] == 0
    assert ann["pendant"]["verdict"] == "pass"
    assert ann["ew_bound"]["verdict"] == "pass"
    assert not ann["theorem_hypotheses_met"]
    small = theorem_report(3)
    assert small.annotations and not small.annotations[0]["theorem_hypotheses_met"]


def test_theorem_report_rejects_even():
    with pytest.raises(SearchError, match="even"):
        theorem_report(8)
    # plain search still explores even sizes
    assert extremal_search(8).argmax


def test_empty_survivor_set():
    with pytest.raises(SearchError):
        extremal_search(3, patterns=("k3", "c4"), max_n=3)


def test_disconnected_not_enumerated():
    for g in enumerate_connected(6):
        assert not any(r == 0 for r in g.adj)
    assert isinstance(next(enumerate_connected(2)), Graph)
