"""Undirected graph machinery: transitive orientation, permutation-graph
recognition, poset algorithms (antichains, Mirsky colorings) and the exact
NP-hard solvers used by the analyzers."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations


class GraphError(ValueError):
    pass


class GraphParseError(GraphError):
    pass


def vertex_pair(a: str, b: str) -> tuple[str, str]:
    """Canonical unordered pair (sorted by name)."""
    return (a, b) if a < b else (b, a)


class UndirectedGraph:
    """Simple undirected graph with named vertices.

    Immutable after construction. Vertex order is preserved for
    deterministic output; edges are canonicalised as name-sorted pairs.
    """

    def __init__(self, vertices, edges=()):
        self.vertices: tuple[str, ...] = tuple(vertices)
        if not self.vertices:
            raise GraphError("graph needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("duplicate vertex name")
        vset = set(self.vertices)
        edge_list: list[tuple[str, str]] = []
        seen: set[tuple[str, str]] = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            if u not in vset or v not in vset:
                raise GraphError(f"edge {u!r}-{v!r} uses unknown vertex")
            e = vertex_pair(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {u!r}-{v!r}")
            seen.add(e)
            edge_list.append(e)
        self.edge_list: tuple[tuple[str, str], ...] = tuple(edge_list)
        self.edges: frozenset[tuple[str, str]] = frozenset(edge_list)
        self._adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in edge_list:
            self._adj[u].add(v)
            self._adj[v].add(u)

    def __eq__(self, other):
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.edges == other.edges

    def __hash__(self):
        return hash((frozenset(self.vertices), self.edges))

    def __repr__(self):
        return f"UndirectedGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def has_edge(self, a: str, b: str) -> bool:
        return vertex_pair(a, b) in self.edges

    def neighbors(self, v: str) -> set[str]:
        return set(self._adj[v])

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def complement(self) -> "UndirectedGraph":
        comp = [
            (u, v)
            for u, v in combinations(self.vertices, 2)
            if vertex_pair(u, v) not in self.edges
        ]
        return UndirectedGraph(self.vertices, comp)

    def induced(self, keep) -> "UndirectedGraph":
        kset = set(keep)
        unknown = kset - set(self.vertices)
        if unknown:
            raise GraphError(f"unknown vertices in induced subgraph: {sorted(unknown)}")
        verts = [v for v in self.vertices if v in kset]
        edges = [e for e in self.edge_list if e[0] in kset and e[1] in kset]
        return UndirectedGraph(verts, edges)

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(self.edges)


def parse_graph(text: str) -> UndirectedGraph:
    """Parse the edge-list graph format.

    Line 1: vertex count, line 2: vertex names, then one edge per line
    "u v". Blank lines and lines starting with "#" are ignored.
    """
    lines = [
        (no, line.strip())
        for no, line in enumerate(text.splitlines(), 1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if len(lines) < 2:
        raise GraphParseError("graph file needs a vertex count and a name line")
    no, head = lines[0]
    try:
        count = int(head)
    except ValueError:
        raise GraphParseError(f"line {no}: expected vertex count, got {head!r}") from None
    no, namerow = lines[1]
    names = namerow.split()
    if len(names) != count:
        raise GraphParseError(f"line {no}: expected {count} vertex names, got {len(names)}")
    edges = []
    for no, line in lines[2:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {no}: expected edge 'u v', got {line!r}")
        edges.append((parts[0], parts[1]))
    try:
        return UndirectedGraph(names, edges)
    except GraphError as exc:
        raise GraphParseError(str(exc)) from None


def emit_graph(g: UndirectedGraph) -> str:
    """Serialise in the edge-list format with edges in sorted order."""
    out = [str(len(g.vertices)), " ".join(g.vertices)]
    out.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"


def emit_dot(g: UndirectedGraph) -> str:
    """Deterministic DOT output: vertices and edges in input order."""
    out = ["graph G {"]
    out.extend(f'  "{v}";' for v in g.vertices)
    out.extend(f'  "{u}" -- "{v}";' for u, v in g.edge_list)
    out.append("}")
    return "\n".join(out) + "\n"


class Orientation:
    """An orientation of every edge of a base graph.

    The ``verified`` flag is set only after an explicit transitivity
    check; poset algorithms refuse unverified orientations.
    """

    def __init__(self, base: UndirectedGraph, arcs):
        self.base = base
        self.arcs: frozenset[tuple[str, str]] = frozenset(arcs)
        covered = {vertex_pair(a, b) for a, b in self.arcs}
        if covered != base.edges or len(self.arcs) != len(base.edges):
            raise GraphError("orientation must direct each base edge exactly once")
        self._verified = False

    @property
    def verified(self) -> bool:
        return self._verified

    def successor_map(self) -> dict[str, set[str]]:
        succ: dict[str, set[str]] = {v: set() for v in self.base.vertices}
        for a, b in self.arcs:
            succ[a].add(b)
        return succ

    def verify_transitive(self) -> bool:
        """Explicit triple check: (u,v) and (v,w) arcs require (u,w)."""
        succ = self.successor_map()
        for v, outs in succ.items():
            for u in self.base.vertices:
                if v in succ[u]:
                    if not outs <= succ[u]:
                        return False
        self._verified = True
        return True


@dataclass(frozen=True)
class PermutationDiagram:
    """Two permutations of a vertex set; edges are the inverted pairs."""

    pi1: tuple[str, ...]
    pi2: tuple[str, ...]

    def __post_init__(self):
        if set(self.pi1) != set(self.pi2) or len(set(self.pi1)) != len(self.pi1):
            raise GraphError("pi1 and pi2 must be permutations of the same vertex set")

    def induced_edges(self) -> frozenset[tuple[str, str]]:
        p1 = {v: i for i, v in enumerate(self.pi1)}
        p2 = {v: i for i, v in enumerate(self.pi2)}
        return frozenset(
            vertex_pair(u, v)
            for u, v in combinations(self.pi1, 2)
            if (p1[u] < p1[v]) != (p2[u] < p2[v])
        )

    def graph(self) -> UndirectedGraph:
        return UndirectedGraph(self.pi1, sorted(self.induced_edges()))


def _force_class(u, v, edges, adj):
    """Implication class of the arc (u,v) in the graph with edge set `edges`.

    Returns the forced arc set, or None on a conflict (some edge forced
    in both directions).
    """
    oriented = {(u, v)}
    queue = deque([(u, v)])
    while queue:
        a, b = queue.popleft()
        for c in adj[a]:
            if c != b and vertex_pair(b, c) not in edges:
                if (c, a) in oriented:
                    return None
                if (a, c) not in oriented:
                    oriented.add((a, c))
                    queue.append((a, c))
        for c in adj[b]:
            if c != a and vertex_pair(a, c) not in edges:
                if (b, c) in oriented:
                    return None
                if (c, b) not in oriented:
                    oriented.add((c, b))
                    queue.append((c, b))
    return oriented


def transitive_orientation(g: UndirectedGraph) -> Orientation | None:
    """Orient the edges transitively, or return None if impossible.

    Implication-class forcing: repeatedly pick an unoriented edge, orient
    it, close under forcing within the remaining graph, remove the class,
    repeat. The final orientation is re-verified explicitly, so the
    verdict never rests on recognition subtleties alone.
    """
    remaining = set(g.edges)
    adj = {v: g.neighbors(v) for v in g.vertices}
    arcs: list[tuple[str, str]] = []
    while remaining:
        u, v = min(remaining)
        forced = _force_class(u, v, remaining, adj)
        if forced is None:
            return None
        for a, b in forced:
            arcs.append((a, b))
            remaining.discard(vertex_pair(a, b))
            adj[a].discard(b)
            adj[b].discard(a)
    o = Orientation(g, arcs)
    if not o.verify_transitive():
        return None
    return o


def _linear_order(arcs, vertices) -> tuple[str, ...] | None:
    """Topological order of a tournament on `vertices`; None if cyclic."""
    indeg = {v: 0 for v in vertices}
    for _, b in arcs:
        indeg[b] += 1
    order = sorted(vertices, key=lambda v: indeg[v])
    pos = {v: i for i, v in enumerate(order)}
    for a, b in arcs:
        if pos[a] >= pos[b]:
            return None
    return tuple(order)


def recognize_permutation(g: UndirectedGraph) -> PermutationDiagram | None:
    """Permutation-graph recognition via double transitive orientation.

    G is a permutation graph iff both G and its complement admit
    transitive orientations F1 and F2; then pi1 is the topological order
    of F1 ∪ F2 and pi2 of F1-reversed ∪ F2. The returned diagram is
    re-verified to regenerate exactly the input edge set.
    """
    f1 = transitive_orientation(g)
    if f1 is None:
        return None
    f2 = transitive_orientation(g.complement())
    if f2 is None:
        return None
    pi1 = _linear_order(f1.arcs | f2.arcs, g.vertices)
    pi2 = _linear_order({(b, a) for a, b in f1.arcs} | f2.arcs, g.vertices)
    if pi1 is None or pi2 is None:
        return None
    diagram = PermutationDiagram(pi1, pi2)
    if diagram.induced_edges() != g.edges:
        return None
    return diagram


def _kuhn_matching(order, succ) -> dict[str, str]:
    """Maximum bipartite matching by augmenting paths.

    Left and right copies share the vertex names; returns match_right:
    right vertex -> matched left vertex.
    """
    match_r: dict[str, str] = {}

    def augment(u, visited):
        for v in sorted(succ[u]):
            if v in visited:
                continue
            visited.add(v)
            if v not in match_r or augment(match_r[v], visited):
                match_r[v] = u
                return True
        return False

    for u in order:
        augment(u, set())
    return match_r


def _require_verified(o: Orientation):
    if not o.verified:
        raise GraphError("orientation has not been verified transitive")


def max_antichain(o: Orientation) -> tuple[str, ...]:
    """Maximum antichain of the poset = maximum independent set of the base.

    Dilworth route: maximum matching in the chain-cover bipartite graph,
    minimum vertex cover via Koenig, antichain as the uncovered vertices.
    The size is checked against the chain-cover bound before returning.
    """
    _require_verified(o)
    succ = o.successor_map()
    order = o.base.vertices
    match_r = _kuhn_matching(order, succ)
    match_l = {u: v for v, u in match_r.items()}
    matched_left = set(match_r.values())

    z_left = {u for u in order if u not in matched_left}
    z_right: set[str] = set()
    frontier = list(z_left)
    while frontier:
        nxt = []
        for u in frontier:
            for v in succ[u]:
                if v != match_l.get(u) and v not in z_right:
                    z_right.add(v)
                    w = match_r.get(v)
                    if w is not None and w not in z_left:
                        z_left.add(w)
                        nxt.append(w)
        frontier = nxt

    antichain = tuple(v for v in order if v in z_left and v not in z_right)
    expected = len(order) - len(match_r)
    if len(antichain) != expected:
        raise GraphError("Koenig construction produced an inconsistent antichain")
    for a, b in combinations(antichain, 2):
        if o.base.has_edge(a, b):
            raise GraphError("antichain is not independent in the base graph")
    return antichain


def minimum_chain_cover(o: Orientation) -> list[list[str]]:
    """Partition the poset into the minimum number of chains."""
    _require_verified(o)
    succ = o.successor_map()
    order = o.base.vertices
    match_r = _kuhn_matching(order, succ)
    nxt = {u: v for v, u in match_r.items()}
    chains = []
    for v in order:
        if v not in match_r:  # no predecessor in the cover
            chain = [v]
            while chain[-1] in nxt:
                chain.append(nxt[chain[-1]])
            chains.append(chain)
    covered = [v for chain in chains for v in chain]
    if sorted(covered) != sorted(order):
        raise GraphError("chain cover does not partition the vertex set")
    for chain in chains:
        for a, b in zip(chain, chain[1:]):
            if b not in succ[a]:
                raise GraphError("chain cover contains a non-chain")
    return chains


def mirsky_coloring(o: Orientation) -> tuple[dict[str, int], int]:
    """Color each vertex by the length of the longest chain ending at it.

    The color count equals the longest chain length, which for a
    comparability graph is the chromatic number.
    """
    _require_verified(o)
    succ = o.successor_map()
    indeg = {v: 0 for v in o.base.vertices}
    for a, b in o.arcs:
        indeg[b] += 1
    height = {v: 1 for v in o.base.vertices}
    queue = deque(v for v in o.base.vertices if indeg[v] == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for w in succ[v]:
            height[w] = max(height[w], height[v] + 1)
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if seen != len(o.base.vertices):
        raise GraphError("verified orientation unexpectedly cyclic")
    return height, max(height.values())


def is_bipartite(g: UndirectedGraph):
    """BFS 2-coloring. Returns (True, coloring) or (False, odd_cycle)."""
    color: dict[str, int] = {}
    parent: dict[str, str | None] = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in sorted(g.neighbors(u)):
                if v not in color:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    return False, _odd_cycle(u, v, parent)
    return True, color


def _odd_cycle(u, v, parent):
    anc_u = [u]
    while parent[anc_u[-1]] is not None:
        anc_u.append(parent[anc_u[-1]])
    on_u = {x: i for i, x in enumerate(anc_u)}
    path_v = [v]
    while path_v[-1] not in on_u:
        path_v.append(parent[path_v[-1]])
    lca = path_v[-1]
    cycle = anc_u[: on_u[lca] + 1] + list(reversed(path_v[:-1]))
    if len(cycle) % 2 == 0:
        raise GraphError("internal error: even witness cycle")
    return cycle


@dataclass
class SolveReport:
    """Outcome of an exact NP-hard solve.

    status: "found", "infeasible" or "budget-exceeded". A budget overrun
    is a distinct outcome, never a wrong answer.
    """

    status: str
    witness: object
    nodes: int


class _BudgetExhausted(Exception):
    pass


class _TargetReached(Exception):
    pass


def _mis_search(nbr, n, budget, stop_at=None, should_stop=None):
    """Branch-and-bound maximum independent set over bitmasks.

    Branches on the highest-degree remaining vertex; prunes with the
    trivial |current| + |remaining| bound. Returns (best_mask, complete,
    nodes); complete is False when the node budget ran out.
    """
    best = {"size": -1, "mask": 0}
    nodes = 0
    full = (1 << n) - 1

    def rec(avail, cur_mask, cur_size):
        nonlocal nodes
        nodes += 1
        if nodes > budget or (should_stop is not None and should_stop()):
            raise _BudgetExhausted
        if cur_size > best["size"]:
            best["size"] = cur_size
            best["mask"] = cur_mask
            if stop_at is not None and cur_size >= stop_at:
                raise _TargetReached
        if avail == 0 or cur_size + avail.bit_count() <= best["size"]:
            return
        pick, pick_deg = -1, -1
        rest = avail
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            d = (nbr[v] & avail).bit_count()
            if d > pick_deg:
                pick, pick_deg = v, d
        bit = 1 << pick
        rec(avail & ~nbr[pick] & ~bit, cur_mask | bit, cur_size + 1)
        rec(avail & ~bit, cur_mask, cur_size)

    complete = True
    try:
        rec(full, 0, 0)
    except _BudgetExhausted:
        complete = False
    except _TargetReached:
        complete = True  # early exit after hitting the target is decisive
    return best["mask"], complete, nodes


def maximum_independent_set(g: UndirectedGraph, budget=10_000_000, should_stop=None):
    """Exact maximum independent set. Returns (vertices, complete, nodes)."""
    n = len(g.vertices)
    idx = {v: i for i, v in enumerate(g.vertices)}
    nbr = [0] * n
    for u, v in g.edges:
        nbr[idx[u]] |= 1 << idx[v]
        nbr[idx[v]] |= 1 << idx[u]
    mask, complete, nodes = _mis_search(nbr, n, budget, should_stop=should_stop)
    found = tuple(v for v in g.vertices if mask >> idx[v] & 1)
    return found, complete, nodes


def exact_independent_set(g: UndirectedGraph, t: int, budget=10_000_000,
                          should_stop=None) -> SolveReport:
    """Find an independent set of size >= t, or prove there is none."""
    if t < 1:
        raise GraphError("target size must be at least 1")
    n = len(g.vertices)
    idx = {v: i for i, v in enumerate(g.vertices)}
    nbr = [0] * n
    for u, v in g.edges:
        nbr[idx[u]] |= 1 << idx[v]
        nbr[idx[v]] |= 1 << idx[u]
    mask, complete, nodes = _mis_search(nbr, n, budget, stop_at=t,
                                        should_stop=should_stop)
    found = tuple(v for v in g.vertices if mask >> idx[v] & 1)
    if len(found) >= t:
        return SolveReport("found", found, nodes)
    if complete:
        return SolveReport("infeasible", None, nodes)
    return SolveReport("budget-exceeded", None, nodes)


def _greedy_clique(g: UndirectedGraph) -> list[str]:
    clique: list[str] = []
    for v in sorted(g.vertices, key=g.degree, reverse=True):
        if all(g.has_edge(v, u) for u in clique):
            clique.append(v)
    return clique


def exact_coloring(g: UndirectedGraph, k: int, budget=10_000_000,
                   should_stop=None) -> SolveReport:
    """Proper k-coloring by backtracking, or proof that none exists.

    Symmetry is broken by allowing each vertex at most one fresh color;
    a greedy clique gives a quick lower-bound refusal.
    """
    if k < 1:
        raise GraphError("k must be at least 1")
    if len(_greedy_clique(g)) > k:
        return SolveReport("infeasible", None, 0)
    order = sorted(g.vertices, key=g.degree, reverse=True)
    adj = [[order.index(u) for u in g.neighbors(v)] for v in order]
    n = len(order)
    colors = [0] * n  # 1-based colors, 0 = unassigned
    nodes = 0

    def rec(i, used):
        nonlocal nodes
        if i == n:
            return True
        nodes += 1
        if nodes > budget or (should_stop is not None and should_stop()):
            raise _BudgetExhausted
        limit = min(k, used + 1)
        for c in range(1, limit + 1):
            if all(colors[j] != c for j in adj[i]):
                colors[i] = c
                if rec(i + 1, max(used, c)):
                    return True
                colors[i] = 0
        return False

    try:
        ok = rec(0, 0)
    except _BudgetExhausted:
        return SolveReport("budget-exceeded", None, nodes)
    if not ok:
        return SolveReport("infeasible", None, nodes)
    witness = {v: colors[i] for i, v in enumerate(order)}
    return SolveReport("found", witness, nodes)
