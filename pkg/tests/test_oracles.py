"""Sanity checks on the brute-force references themselves."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multicrossing import bruteforce as bf
from multicrossing import multicrossing_graph
from multicrossing.constructions import (
    cycle_graph,
    implement_clique,
    implement_even_cycle,
    implement_path,
    path_graph,
)
from multicrossing.generate import random_election, random_graph

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def test_known_values_on_c5():
    c5 = cycle_graph(5)
    assert bf.bf_independent_set(c5)[0] == 2
    assert bf.bf_chromatic(c5)[0] == 3
    assert bf.bf_transitive_orientation(c5) is False
    assert bf.bf_permutation_diagram(c5) is False
    assert bf.bf_is_3_implementable(c5) is False


def test_known_values_on_small_graphs():
    assert bf.bf_is_3_implementable(cycle_graph(4)) is True
    k5 = implement_clique([str(i) for i in range(1, 6)]).target
    assert bf.bf_is_3_implementable(k5) is True
    assert bf.bf_chromatic(path_graph(2))[0] == 2
    assert bf.bf_chromatic(random_graph(5, 0.0, seed=0))[0] == 1


def test_witnesses_are_valid():
    g = random_graph(10, 0.5, seed=4)
    size, members = bf.bf_independent_set(g)
    assert len(members) == size
    assert not any(g.has_edge(a, b) for a in members for b in members if a < b)
    chi, coloring = bf.bf_chromatic(g)
    assert len(set(coloring.values())) == chi
    for u, v in g.edges:
        assert coloring[u] != coloring[v]


def test_size_limits_enforced():
    big = random_graph(25, 0.5, seed=0)
    with pytest.raises(bf.OracleLimitError):
        bf.bf_independent_set(big)
    with pytest.raises(bf.OracleLimitError):
        bf.bf_chromatic(random_graph(15, 0.5, seed=0))
    with pytest.raises(bf.OracleLimitError):
        bf.bf_transitive_orientation(random_graph(11, 0.5, seed=0))
    with pytest.raises(bf.OracleLimitError):
        bf.bf_permutation_diagram(random_graph(8, 0.5, seed=0))
    with pytest.raises(bf.OracleLimitError):
        bf.bf_is_3_implementable(random_graph(6, 0.5, seed=0))


@given(st.integers(min_value=2, max_value=5), seeds)
@settings(max_examples=40, deadline=None)
def test_three_voter_gammas_are_3_implementable(v, seed):
    e = random_election(v, 3, seed=seed)
    assert bf.bf_is_3_implementable(multicrossing_graph(e))


def test_constructed_families_pass_the_oracle():
    for result in [implement_path(5), implement_even_cycle(4),
                   implement_clique(["1", "2", "3", "4"])]:
        assert bf.bf_is_3_implementable(result.target)


@given(st.builds(random_graph,
                 st.integers(min_value=1, max_value=5),
                 st.sampled_from([0.3, 0.7]),
                 seeds))
@settings(max_examples=60, deadline=None)
def test_3_implementable_implies_comparability(g):
    if bf.bf_is_3_implementable(g):
        assert bf.bf_transitive_orientation(g)
