"""Builders that produce elections implementing a target graph.

Every builder recomputes the multi-crossing graph of its output and
refuses to release a result that does not match the target exactly.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .elections import Election, multicrossing_graph, restrict
from .graphs import GraphError, PermutationDiagram, UndirectedGraph, vertex_pair


class ConstructionError(RuntimeError):
    pass


@dataclass(frozen=True)
class ImplementationResult:
    election: Election
    target: UndirectedGraph
    verified: bool
    voters_used: int


def _finish(candidates, votes, target: UndirectedGraph) -> ImplementationResult:
    election = Election(tuple(candidates), tuple(tuple(v) for v in votes))
    got = multicrossing_graph(election)
    if got != target:
        raise ConstructionError(
            "construction failed self-verification: "
            f"missing={sorted(target.edges - got.edges)} "
            f"extra={sorted(got.edges - target.edges)}"
        )
    return ImplementationResult(election, target, True, election.n)


def _int_names(s: int) -> list[str]:
    return [str(i) for i in range(1, s + 1)]


def path_graph(s: int) -> UndirectedGraph:
    names = _int_names(s)
    return UndirectedGraph(names, [(names[i], names[i + 1]) for i in range(s - 1)])


def cycle_graph(s: int) -> UndirectedGraph:
    names = _int_names(s)
    edges = [(names[i], names[i + 1]) for i in range(s - 1)] + [(names[-1], names[0])]
    return UndirectedGraph(names, edges)


def implement_empty(vertices) -> ImplementationResult:
    """Three identical voters: nothing ever crosses."""
    vs = tuple(vertices)
    vote = tuple(vs)
    return _finish(vs, [vote, vote, vote], UndirectedGraph(vs, []))


def implement_clique(vertices) -> ImplementationResult:
    """First and third voters agree, the second ranks in reverse."""
    vs = tuple(vertices)
    vote = tuple(vs)
    rev = tuple(reversed(vs))
    target = UndirectedGraph(
        vs, [(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))]
    )
    return _finish(vs, [vote, rev, vote], target)


def _path_votes(s: int) -> tuple[list[int], list[int]]:
    """Votes 1(=3) and 2 of the 3-voter path profile on candidates 1..s.

    Starting from the sorted order, voters 1 and 3 swap candidates 2i and
    2i+1, voter 2 swaps candidates 2i and 2i-1.
    """
    v1 = list(range(1, s + 1))
    for i in range(1, (s - 1) // 2 + 1):
        v1[2 * i - 1], v1[2 * i] = v1[2 * i], v1[2 * i - 1]
    v2 = list(range(1, s + 1))
    for i in range(1, s // 2 + 1):
        v2[2 * i - 2], v2[2 * i - 1] = v2[2 * i - 1], v2[2 * i - 2]
    return v1, v2


def implement_path(s: int) -> ImplementationResult:
    if s < 2:
        raise ConstructionError("path construction needs length >= 2")
    v1, v2 = _path_votes(s)
    votes = [[str(c) for c in v] for v in (v1, v2, v1)]
    return _finish(_int_names(s), votes, path_graph(s))


def implement_even_cycle(s: int) -> ImplementationResult:
    """3-voter profile for the cycle 1-2-...-s-1 (s even).

    Derived from the path profile: vote 2 moves candidate 1 to the
    bottom, vote 3 re-inserts candidates 1 and 2 just above the bottom.
    Self-verification is mandatory; the generalisation beyond s=6 is
    validated by recomputing the multi-crossing graph.
    """
    if s < 4 or s % 2:
        raise ConstructionError("cycle construction needs an even length >= 4")
    p1, p2 = _path_votes(s)
    v1 = p1
    v2 = [c for c in p2 if c != 1] + [1]
    core = [c for c in p1 if c not in (1, 2)]
    v3 = core[:-1] + [1, 2] + core[-1:]
    votes = [[str(c) for c in v] for v in (v1, v2, v3)]
    return _finish(_int_names(s), votes, cycle_graph(s))


def _check_tree(t: UndirectedGraph):
    if len(t.edges) != len(t.vertices) - 1:
        raise ConstructionError("input is not a tree (wrong edge count)")
    seen = {t.vertices[0]}
    queue = deque([t.vertices[0]])
    while queue:
        u = queue.popleft()
        for v in t.neighbors(u):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    if len(seen) != len(t.vertices):
        raise ConstructionError("input is not a tree (not connected)")


def implement_tree(t: UndirectedGraph, root: str | None = None) -> ImplementationResult:
    """Recursive 3-voter implementation of a tree.

    Invariant maintained bottom-up: the first voter ranks the subtree
    root first. Children are processed in lexicographic order; the root
    defaults to the lexicographically smallest vertex.
    """
    _check_tree(t)
    if root is None:
        root = min(t.vertices)
    elif root not in t.vertices:
        raise ConstructionError(f"root {root!r} is not a vertex")

    children: dict[str, list[str]] = {v: [] for v in t.vertices}
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in sorted(t.neighbors(u)):
            if v not in seen:
                seen.add(v)
                children[u].append(v)
                queue.append(v)

    def build(r: str) -> tuple[list[str], list[str], list[str]]:
        kids = children[r]
        if not kids:
            return [r], [r], [r]
        subs = [build(c) for c in kids]
        v1 = [x for s in subs for x in s[0]]
        v2 = [x for s in subs for x in s[1]]
        v3 = [x for s in subs for x in s[2]]
        kidset = set(kids)
        v1 = kids + [x for x in v1 if x not in kidset]
        k = len(kids)
        v1 = v1[:k] + [r] + v1[k:]
        v2 = [r] + v2
        v3 = v3 + [r]
        # reverse every vote, then reverse the voter order: r ends up first
        return v3[::-1], v2[::-1], v1[::-1]

    votes = build(root)
    return _finish(t.vertices, votes, t)


def implement_permutation_graph(d: PermutationDiagram) -> ImplementationResult:
    """The profile (pi1, pi2, pi1) implements the diagram's graph."""
    return _finish(d.pi1, [d.pi1, d.pi2, d.pi1], d.graph())


def _rebase_witness(edges, vertices, first) -> tuple[str, ...] | None:
    """Second permutation pairing with `first` to witness exactly `edges`.

    The required order (invert a pair iff it is an edge) must be a total
    order; None when the induced tournament is cyclic, i.e. no witness
    with this first permutation exists.
    """
    pos = {v: i for i, v in enumerate(first)}
    indeg = {v: 0 for v in vertices}
    arcs = []
    for i, u in enumerate(first):
        for v in first[i + 1:]:
            if vertex_pair(u, v) in edges:
                arcs.append((v, u))
                indeg[u] += 1
            else:
                arcs.append((u, v))
                indeg[v] += 1
    order = sorted(vertices, key=lambda v: (indeg[v], pos[v]))
    rank = {v: i for i, v in enumerate(order)}
    for a, b in arcs:
        if rank[a] >= rank[b]:
            return None
    return tuple(order)


def intersect_implementations(d1: PermutationDiagram,
                              d2: PermutationDiagram) -> ImplementationResult:
    """3-voter election implementing the intersection of two diagrams' edges.

    Rewitnesses one diagram so the two share a middle permutation: in the
    profile (w1, w2, w3), pairs multi-cross exactly when both w1 and w3
    disagree with w2, i.e. on the edge intersection. Not every witness
    pair admits a shared middle; when no rebasing works the construction
    fails rather than implement the wrong graph.
    """
    if set(d1.pi1) != set(d2.pi1):
        raise GraphError("diagrams must share the vertex set")
    e1 = d1.induced_edges()
    e2 = d2.induced_edges()
    vertices = d1.pi1
    target = UndirectedGraph(vertices, sorted(e1 & e2))

    def rev(p):
        return tuple(reversed(p))

    attempts = [
        (e2, mid, "d1-first")
        for mid in (d1.pi2, d1.pi1, rev(d1.pi2), rev(d1.pi1))
    ] + [
        (e1, mid, "d2-last")
        for mid in (d2.pi1, d2.pi2, rev(d2.pi1), rev(d2.pi2))
    ]

    for other_edges, mid, shape in attempts:
        third = _rebase_witness(other_edges, vertices, mid)
        if third is None:
            continue
        if shape == "d1-first":
            # (w1, mid) witnesses e1 since mid is one of d1's permutations
            w1 = d1.pi1 if mid in (d1.pi2, rev(d1.pi2)) else d1.pi2
            if mid in (rev(d1.pi1), rev(d1.pi2)):
                w1 = rev(w1)
            votes = [w1, mid, third]
        else:
            w3 = d2.pi2 if mid in (d2.pi1, rev(d2.pi1)) else d2.pi1
            if mid in (rev(d2.pi1), rev(d2.pi2)):
                w3 = rev(w3)
            votes = [third, mid, w3]
        try:
            return _finish(vertices, votes, target)
        except ConstructionError:
            continue
    raise ConstructionError(
        "no shared-middle witness found; the edge intersection may not be "
        "3-implementable from these diagrams"
    )


def _fullsc_votes(m: int):
    """Odd-even swap schedule: m+1 votes plus pair -> crossing index.

    Even votes swap positions (2i-1, 2i), odd votes positions (2i, 2i+1);
    each candidate pair is swapped exactly once, always adjacently.
    """
    votes = [list(range(1, m + 1))]
    crossing: dict[tuple[int, int], int] = {}
    for t in range(1, m + 1):  # building vote t+1 from vote t
        prev = votes[-1]
        new = prev.copy()
        if (t + 1) % 2 == 0:
            positions = range(0, m - 1, 2)
        else:
            positions = range(1, m - 1, 2)
        for p in positions:
            new[p], new[p + 1] = new[p + 1], new[p]
            a, b = prev[p], prev[p + 1]
            crossing[(min(a, b), max(a, b))] = t
        votes.append(new)
    return votes, crossing


def fully_single_crossing(m: int) -> Election:
    """m-candidate, (m+1)-voter election where every pair crosses exactly
    once, always as an adjacent swap."""
    if m < 2:
        raise ConstructionError("need at least 2 candidates")
    votes, _ = _fullsc_votes(m)
    return Election(
        tuple(_int_names(m)),
        tuple(tuple(str(c) for c in vote) for vote in votes),
    )


def implement_general(g: UndirectedGraph) -> ImplementationResult:
    """Implement an arbitrary graph with at most 2|V|+1 voters.

    Doubles each vote of the fully single-crossing election, then for
    every edge re-applies its unique adjacent swap in the second copy of
    the vote just after the crossing, making the pair cross twice.
    """
    m = len(g.vertices)
    if m == 1:
        return _finish(g.vertices, [tuple(g.vertices)], g)
    order = tuple(g.vertices)
    name_of = {i + 1: order[i] for i in range(m)}
    num_of = {v: i + 1 for i, v in enumerate(order)}
    base, crossing = _fullsc_votes(m)
    vhat = [base[0].copy()]
    for vote in base[1:]:
        vhat.append(vote.copy())
        vhat.append(vote.copy())
    for u, v in g.edges:
        a, b = sorted((num_of[u], num_of[v]))
        i = crossing[(a, b)]
        vote = vhat[2 * i]  # 0-based: the (2i+1)-st voter
        pa, pb = vote.index(a), vote.index(b)
        if abs(pa - pb) != 1:
            raise ConstructionError("swap positions are not adjacent")
        vote[pa], vote[pb] = vote[pb], vote[pa]
    votes = [[name_of[c] for c in vote] for vote in vhat]
    return _finish(order, votes, g)


@dataclass(frozen=True)
class RamseyExtract:
    kind: str  # "clique" | "independent"
    members: tuple[str, ...]


def _longest_monotone(values: list[int], decreasing: bool) -> list[int]:
    """Indices of a longest increasing (or decreasing) subsequence, O(s^2)."""
    n = len(values)
    best_len = [1] * n
    back = [-1] * n
    for i in range(n):
        for j in range(i):
            ok = values[j] > values[i] if decreasing else values[j] < values[i]
            if ok and best_len[j] + 1 > best_len[i]:
                best_len[i] = best_len[j] + 1
                back[i] = j
    end = max(range(n), key=lambda i: best_len[i])
    out = []
    while end != -1:
        out.append(end)
        end = back[end]
    return out[::-1]


def ramsey_extract(e: Election) -> RamseyExtract:
    """Candidates ranked identically or oppositely by every voter.

    Repeated longest increasing/decreasing subsequence extraction
    relative to the first vote (ties favour increasing); the survivors
    form a clique or an independent set of the multi-crossing graph of
    size at least s^(1/2^(n-1)).
    """
    rank1 = {c: i for i, c in enumerate(e.votes[0])}
    keep = list(e.votes[0])
    for vote in e.votes[1:]:
        kset = set(keep)
        seq = [c for c in vote if c in kset]
        values = [rank1[c] for c in seq]
        inc = _longest_monotone(values, decreasing=False)
        dec = _longest_monotone(values, decreasing=True)
        chosen = inc if len(inc) >= len(dec) else dec
        keep = sorted((seq[i] for i in chosen), key=rank1.get)
    members = tuple(sorted(keep, key=e.candidates.index))
    if len(members) < 2:
        return RamseyExtract("independent", members)
    gamma = multicrossing_graph(restrict(e, members))
    n_edges = len(gamma.edges)
    n_pairs = len(members) * (len(members) - 1) // 2
    if n_edges == n_pairs:
        return RamseyExtract("clique", members)
    if n_edges == 0:
        return RamseyExtract("independent", members)
    raise ConstructionError("extracted set is neither a clique nor independent")
