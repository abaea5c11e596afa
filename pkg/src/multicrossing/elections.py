"""Elections with a fixed voter order and their crossing structure."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import UndirectedGraph, vertex_pair


class ElectionError(ValueError):
    pass


class ElectionParseError(ElectionError):
    pass


@dataclass(frozen=True)
class Election:
    """An ordered list of strict rankings over a fixed candidate set.

    Voter i is position i (1-based). The voter order is significant and
    immutable; all operations on elections are pure functions.
    """

    candidates: tuple[str, ...]
    votes: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if not self.candidates:
            raise ElectionError("election needs at least one candidate")
        if not self.votes:
            raise ElectionError("election needs at least one vote")
        cset = set(self.candidates)
        if len(cset) != len(self.candidates):
            raise ElectionError("duplicate candidate name")
        for i, vote in enumerate(self.votes, 1):
            if len(vote) != len(self.candidates) or set(vote) != cset:
                raise ElectionError(
                    f"vote {i} is not a permutation of the candidate set"
                )

    @property
    def m(self) -> int:
        return len(self.candidates)

    @property
    def n(self) -> int:
        return len(self.votes)

    def positions(self, voter: int) -> dict[str, int]:
        """Rank of each candidate in the given voter's ballot (1-based voter)."""
        return {c: i for i, c in enumerate(self.votes[voter - 1])}

    def prefers(self, voter: int, a: str, b: str) -> bool:
        pos = self.positions(voter)
        return pos[a] < pos[b]


@dataclass(frozen=True)
class CrossingSequence:
    """Per-voter preference signs for one candidate pair.

    signs[i] is True when the first element of `pair` is preferred by
    voter i+1; crossings counts adjacent sign changes.
    """

    pair: tuple[str, str]
    signs: tuple[bool, ...]

    @property
    def crossings(self) -> int:
        return sum(a != b for a, b in zip(self.signs, self.signs[1:]))

    @property
    def multicrossing(self) -> bool:
        return self.crossings >= 2


def parse_election(text: str) -> Election:
    """Parse the election file format.

    Line 1: "m n", line 2: m candidate names, then n ranking lines with
    names separated by ">". Lines starting with "#" are comments.
    """
    lines = [
        (no, line.strip())
        for no, line in enumerate(text.splitlines(), 1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ElectionParseError("empty election file")
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 2:
        raise ElectionParseError(f"line {no}: expected header 'm n', got {head!r}")
    try:
        m, n = int(parts[0]), int(parts[1])
    except ValueError:
        raise ElectionParseError(f"line {no}: malformed header {head!r}") from None
    if len(lines) < 2:
        raise ElectionParseError("missing candidate name line")
    no, namerow = lines[1]
    candidates = tuple(namerow.split())
    if len(candidates) != m:
        raise ElectionParseError(
            f"line {no}: expected {m} candidate names, got {len(candidates)}"
        )
    if len(set(candidates)) != m:
        raise ElectionParseError(f"line {no}: duplicate candidate name")
    body = lines[2:]
    if len(body) != n:
        raise ElectionParseError(f"expected {n} vote lines, found {len(body)}")
    cset = set(candidates)
    votes = []
    for no, line in body:
        vote = tuple(tok.strip() for tok in line.split(">"))
        seen = set()
        for c in vote:
            if c not in cset:
                raise ElectionParseError(f"line {no}: unknown candidate {c!r}")
            if c in seen:
                raise ElectionParseError(f"line {no}: candidate {c!r} listed twice")
            seen.add(c)
        if len(vote) != m:
            raise ElectionParseError(
                f"line {no}: vote ranks {len(vote)} of {m} candidates"
            )
        votes.append(vote)
    return Election(candidates, tuple(votes))


def emit_election(e: Election) -> str:
    out = [f"{e.m} {e.n}", " ".join(e.candidates)]
    out.extend(">".join(vote) for vote in e.votes)
    return "\n".join(out) + "\n"


def restrict(e: Election, keep) -> Election:
    """Restriction to a candidate subset, preserving each vote's order."""
    kset = set(keep)
    if not kset:
        raise ElectionError("restriction to an empty candidate set")
    unknown = kset - set(e.candidates)
    if unknown:
        raise ElectionError(f"unknown candidates in restriction: {sorted(unknown)}")
    return Election(
        tuple(c for c in e.candidates if c in kset),
        tuple(tuple(c for c in vote if c in kset) for vote in e.votes),
    )


def crossing_sequence(e: Election, a: str, b: str) -> CrossingSequence:
    if a == b:
        raise ElectionError("crossing sequence needs two distinct candidates")
    for c in (a, b):
        if c not in e.candidates:
            raise ElectionError(f"unknown candidate {c!r}")
    signs = []
    for vote in e.votes:
        pos = {x: i for i, x in enumerate(vote)}
        signs.append(pos[a] < pos[b])
    return CrossingSequence((a, b), tuple(signs))


def is_single_crossing(e: Election):
    """Check that every pair crosses at most once.

    Returns (True, None) or (False, (pair, (i, j, k))) where the 1-based
    voters i < j < k witness the double crossing of the pair.
    """
    votes_pos = [e.positions(i) for i in range(1, e.n + 1)]
    for ai in range(e.m):
        for bi in range(ai + 1, e.m):
            a, b = e.candidates[ai], e.candidates[bi]
            signs = [pos[a] < pos[b] for pos in votes_pos]
            first = next((i for i in range(1, e.n) if signs[i] != signs[i - 1]), None)
            if first is None:
                continue
            second = next(
                (i for i in range(first + 1, e.n) if signs[i] != signs[i - 1]), None
            )
            if second is not None:
                witness = (first, first + 1, second + 1)  # 1-based voters
                return False, (vertex_pair(a, b), witness)
    return True, None


def multicrossing_graph(e: Election) -> UndirectedGraph:
    """Graph on the candidates with an edge for every multi-crossing pair.

    Plain O(n * m^2) pairwise scan, vectorised: per-voter position
    arrays, pairwise order booleans, adjacent sign flips summed per pair.
    """
    m, n = e.m, e.n
    if m == 1:
        return UndirectedGraph(e.candidates, [])
    idx = {c: i for i, c in enumerate(e.candidates)}
    ballots = np.array([[idx[c] for c in vote] for vote in e.votes])
    pos = np.argsort(ballots, axis=1)  # pos[voter][candidate] = rank
    ai, bi = np.triu_indices(m, k=1)
    before = pos[:, ai] < pos[:, bi]  # n x pairs
    if n == 1:
        return UndirectedGraph(e.candidates, [])
    crossings = (before[:-1] != before[1:]).sum(axis=0)
    edges = [
        (e.candidates[int(a)], e.candidates[int(b)])
        for a, b, c in zip(ai, bi, crossings)
        if c >= 2
    ]
    return UndirectedGraph(e.candidates, edges)
