"""Elections built to realise a target multi-crossing graph."""
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multicrossing import (
    ConstructionError,
    emit_election,
    fully_single_crossing,
    implement_clique,
    implement_empty,
    implement_even_cycle,
    implement_general,
    implement_path,
    implement_permutation_graph,
    implement_tree,
    intersect_implementations,
    is_single_crossing,
    multicrossing_graph,
    ramsey_extract,
)
from multicrossing.graphs import PermutationDiagram
from multicrossing.constructions import cycle_graph, path_graph
from multicrossing.generate import (
    random_election,
    random_graph,
    random_permutation_diagram,
    random_tree,
)

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def test_path_fixture_exact(fixture_text):
    result = implement_path(6)
    assert emit_election(result.election) == "\n".join(
        fixture_text("table1_left.elec").splitlines()[1:]
    ) + "\n"
    assert result.voters_used == 3


def test_cycle_fixture_exact(fixture_text):
    result = implement_even_cycle(6)
    assert emit_election(result.election) == "\n".join(
        fixture_text("table1_right.elec").splitlines()[1:]
    ) + "\n"


@pytest.mark.parametrize("s", [2, 3, 4, 5, 10, 37, 100])
def test_path_round_trip(s):
    result = implement_path(s)
    assert result.verified
    assert multicrossing_graph(result.election) == path_graph(s)
    assert result.voters_used == 3


@pytest.mark.parametrize("s", [4, 6, 8, 10, 38, 100])
def test_even_cycle_round_trip(s):
    result = implement_even_cycle(s)
    assert result.verified
    assert multicrossing_graph(result.election) == cycle_graph(s)
    assert result.voters_used == 3


def test_odd_cycle_refused():
    with pytest.raises(ConstructionError):
        implement_even_cycle(5)
    with pytest.raises(ConstructionError):
        implement_even_cycle(2)


@pytest.mark.parametrize("s", [1, 2, 3, 12, 30])
def test_clique_and_empty_round_trip(s):
    names = [str(i) for i in range(1, s + 1)]
    clique = implement_clique(names)
    assert multicrossing_graph(clique.election).edges == frozenset(
        (a, b) for a in names for b in names if a < b
    )
    empty = implement_empty(names)
    assert is_single_crossing(empty.election)[0]


@given(st.integers(min_value=2, max_value=60), seeds)
@settings(max_examples=40, deadline=None)
def test_tree_round_trip(v, seed):
    t = random_tree(v, seed=seed)
    result = implement_tree(t)
    assert result.verified
    assert multicrossing_graph(result.election) == t
    assert result.voters_used == 3


def test_tree_rejects_non_trees():
    with pytest.raises(ConstructionError):
        implement_tree(cycle_graph(4))
    disconnected = random_graph(4, 0.0, seed=0)
    with pytest.raises(ConstructionError):
        implement_tree(disconnected)


@given(st.builds(random_permutation_diagram,
                 st.integers(min_value=1, max_value=20), seeds))
@settings(max_examples=60, deadline=None)
def test_permutation_diagram_round_trip(d):
    result = implement_permutation_graph(d)
    assert result.verified
    assert multicrossing_graph(result.election) == d.graph()
    assert result.voters_used == 3


@given(st.builds(random_graph,
                 st.integers(min_value=1, max_value=40),
                 st.sampled_from([0.1, 0.5, 0.9]),
                 seeds))
@settings(max_examples=40, deadline=None)
def test_general_round_trip(g):
    result = implement_general(g)
    assert result.verified
    assert multicrossing_graph(result.election) == g
    assert result.voters_used <= 2 * len(g.vertices) + 1


def test_general_handles_single_vertex():
    g = random_graph(1, 0.5, seed=0)
    result = implement_general(g)
    assert multicrossing_graph(result.election) == g


# ----------------------------------------------------- fully single-crossing


def test_fullsc_fixture_exact(fixture_text):
    assert emit_election(fully_single_crossing(7)) == fixture_text("table2.elec")


@pytest.mark.parametrize("m", [2, 3, 8, 25])
def test_fullsc_structure(m):
    e = fully_single_crossing(m)
    assert e.n == m + 1
    assert e.votes[-1] == tuple(reversed(e.votes[0]))
    ok, _ = is_single_crossing(e)
    assert ok
    # consecutive votes differ only by disjoint adjacent swaps, and the
    # swaps over the whole sequence sort the first vote into its reverse
    total = 0
    for v1, v2 in zip(e.votes, e.votes[1:]):
        diff = [i for i in range(m) if v1[i] != v2[i]]
        assert all(b - a == 1 for a, b in zip(diff[::2], diff[1::2]))
        for a, b in zip(diff[::2], diff[1::2]):
            assert (v1[a], v1[b]) == (v2[b], v2[a])
        total += len(diff) // 2
    assert total == m * (m - 1) // 2


def test_fullsc_every_pair_crosses_once():
    from multicrossing import crossing_sequence

    e = fully_single_crossing(9)
    cands = e.candidates
    for i, a in enumerate(cands):
        for b in cands[i + 1:]:
            assert crossing_sequence(e, a, b).crossings == 1


# ------------------------------------------------------------- intersection


def test_intersection_of_identical_diagrams():
    d = random_permutation_diagram(8, seed=3)
    result = intersect_implementations(d, d)
    assert multicrossing_graph(result.election) == d.graph()


def test_intersection_with_clique():
    names = tuple(str(i) for i in range(1, 7))
    clique = PermutationDiagram(names, tuple(reversed(names)))
    other = random_permutation_diagram(6, seed=5)
    result = intersect_implementations(clique, other)
    assert multicrossing_graph(result.election) == other.graph()


@given(st.integers(min_value=2, max_value=10), seeds, seeds)
@settings(max_examples=60, deadline=None)
def test_intersection_when_it_succeeds_is_correct(v, s1, s2):
    d1 = random_permutation_diagram(v, seed=s1)
    d2 = random_permutation_diagram(v, seed=s2)
    expected_edges = d1.induced_edges() & d2.induced_edges()
    try:
        result = intersect_implementations(d1, d2)
    except ConstructionError:
        return  # the combination step is not always applicable
    assert multicrossing_graph(result.election).edges == expected_edges


# ------------------------------------------------------------------ ramsey


@given(st.integers(min_value=2, max_value=4), seeds)
@settings(max_examples=60, deadline=None)
def test_ramsey_extract_verified(n, seed):
    e = random_election(16, n, seed=seed)
    extracted = ramsey_extract(e)
    g = multicrossing_graph(e)
    members = extracted.members
    bound = math.ceil(16 ** (1 / 2 ** (n - 1)))
    assert len(members) >= bound
    pairs = [(a, b) for a in members for b in members if a < b]
    if extracted.kind == "clique":
        assert all(g.has_edge(a, b) for a, b in pairs)
    else:
        assert extracted.kind == "independent"
        assert not any(g.has_edge(a, b) for a, b in pairs)
