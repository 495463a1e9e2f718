"""Exact perfect-matching machinery on cubic graphs and their subgraphs.

All searches are complete backtracking over vertex bitmasks: pick an
uncovered vertex of minimum residual degree (ties by lowest id) and try
its neighbours in ascending order.  Counting uses the deletion
recurrence count(G) = sum over neighbours w of v of count(G - {v, w})
memoised on the residual vertex set, with exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ClarkitError
from .rotation import Edge, edge_key

Adjacency = Mapping[int, Iterable[int]]


@dataclass(frozen=True)
class Matching:
    """Set of pairwise vertex-disjoint edges."""

    edges: frozenset[Edge]

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def is_perfect_on(self, vertices: Iterable[int]) -> bool:
        return self.covered == frozenset(vertices)

    def contains_vertex(self, v: int) -> bool:
        return any(v in e for e in self.edges)

    def partner(self, v: int) -> int | None:
        for a, b in self.edges:
            if a == v:
                return b
            if b == v:
                return a
        return None

    def to_text(self) -> str:
        """Sorted ``u-v`` edge tokens, one per line."""
        return "\n".join(
            f"{u}-{v}" for u, v in sorted(edge_key(*e) for e in self.edges)
        ) + "\n"


@dataclass(frozen=True)
class FriesResult:
    """A perfect matching with its alternating hexagons."""

    matching: Matching
    alternating_hexagons: frozenset[int]
    pentagon_free: bool


class _BitGraph:
    """Index-compressed adjacency bitmasks over an arbitrary vertex set."""

    __slots__ = ("vertices", "pos", "adj")

    def __init__(self, adjacency: Adjacency, forbidden: frozenset[Edge] = frozenset()):
        self.vertices = sorted(adjacency)
        self.pos = {v: i for i, v in enumerate(self.vertices)}
        self.adj = [0] * len(self.vertices)
        for v, nbrs in adjacency.items():
            i = self.pos[v]
            for u in nbrs:
                if u in self.pos and edge_key(u, v) not in forbidden:
                    self.adj[i] |= 1 << self.pos[u]

    def full_mask(self) -> int:
        return (1 << len(self.vertices)) - 1


def pm_exists(adj: list[int], remaining: int, memo: dict[int, bool] | None = None) -> bool:
    """Perfect matching existence on index-masked adjacency, no witness.

    ``adj`` maps vertex index to its neighbour bitmask; only vertices in
    ``remaining`` participate.  Same complete search as
    find_perfect_matching, stripped for inner-loop use.
    """
    if remaining == 0:
        return True
    if memo is not None:
        hit = memo.get(remaining)
        if hit is not None:
            return hit
    if remaining.bit_count() % 2 != 0:
        if memo is not None:
            memo[remaining] = False
        return False
    best_v, best_nb, best_d = -1, 0, 1 << 30
    rest = remaining
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        nb = adj[v] & remaining
        d = nb.bit_count()
        if d == 0:
            if memo is not None:
                memo[remaining] = False
            return False
        if d < best_d:
            best_v, best_nb, best_d = v, nb, d
            if d == 1:
                break
    nb = best_nb
    mask_v = 1 << best_v
    result = False
    while nb:
        low = nb & -nb
        nb ^= low
        if pm_exists(adj, remaining & ~(mask_v | low), memo):
            result = True
            break
    if memo is not None:
        memo[remaining] = result
    return result


def _match_rest(adj: list[int], remaining: int, optional: int, out: list[Edge], verts) -> bool:
    """Extend a matching covering every vertex of remaining & ~optional.

    ``optional`` vertices may stay exposed; all others must be matched.
    """
    required = remaining & ~optional
    if required == 0:
        return True
    # pick the required vertex of minimum residual degree
    best_v, best_nb, best_d = -1, 0, 1 << 30
    rest = required
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        nb = adj[v] & remaining
        d = nb.bit_count()
        if d == 0:
            return False
        if d < best_d:
            best_v, best_nb, best_d = v, nb, d
            if d == 1:
                break
    v = best_v
    nb = best_nb
    while nb:
        low = nb & -nb
        w = low.bit_length() - 1
        nb ^= low
        if _match_rest(adj, remaining & ~((1 << v) | (1 << w)), optional, out, verts):
            out.append(edge_key(verts[v], verts[w]))
            return True
    return False


def find_perfect_matching(
    adjacency: Adjacency,
    forced: Iterable[Edge] = (),
    forbidden: Iterable[Edge] = (),
) -> Matching | None:
    """A perfect matching containing ``forced`` and avoiding ``forbidden``.

    Returns None when no such matching exists; the search is complete.
    """
    forced_edges = [edge_key(*e) for e in forced]
    forbidden_set = frozenset(edge_key(*e) for e in forbidden)
    seen: set[int] = set()
    for u, v in forced_edges:
        if edge_key(u, v) in forbidden_set:
            raise ClarkitError(f"edge {(u, v)} both forced and forbidden")
        if u in seen or v in seen:
            raise ClarkitError("forced edges are not pairwise disjoint")
        seen.update((u, v))
    g = _BitGraph(adjacency, forbidden_set)
    remaining = g.full_mask()
    for u, v in forced_edges:
        if u not in g.pos or v not in g.pos:
            return None
        iu, iv = g.pos[u], g.pos[v]
        if not (g.adj[iu] >> iv) & 1:
            return None
        remaining &= ~((1 << iu) | (1 << iv))
    if remaining.bit_count() % 2 != 0:
        return None
    out: list[Edge] = []
    if not _match_rest(g.adj, remaining, 0, out, g.vertices):
        return None
    return Matching(frozenset(out) | frozenset(forced_edges))


def find_matching_covering(
    adjacency: Adjacency, required: Iterable[int]
) -> Matching | None:
    """A matching covering every ``required`` vertex; others may stay exposed."""
    g = _BitGraph(adjacency)
    req_mask = 0
    for v in required:
        if v not in g.pos:
            return None
        req_mask |= 1 << g.pos[v]
    out: list[Edge] = []
    if not _match_rest(g.adj, g.full_mask(), g.full_mask() & ~req_mask, out, g.vertices):
        return None
    return Matching(frozenset(out))


def count_perfect_matchings(adjacency: Adjacency, order: str = "low") -> int:
    """Exact number of perfect matchings.

    ``order`` selects the vertex-elimination order ("low" or "high");
    both orders must agree, which the tests use as a cross-check.
    """
    g = _BitGraph(adjacency)
    n = len(g.vertices)
    if n % 2 != 0:
        return 0
    adj = g.adj
    memo: dict[int, int] = {}
    take_high = order == "high"

    def count(remaining: int) -> int:
        if remaining == 0:
            return 1
        cached = memo.get(remaining)
        if cached is not None:
            return cached
        if take_high:
            v = remaining.bit_length() - 1
        else:
            v = (remaining & -remaining).bit_length() - 1
        nb = adj[v] & remaining
        total = 0
        mask_v = 1 << v
        while nb:
            low = nb & -nb
            nb ^= low
            total += count(remaining & ~(mask_v | low))
        memo[remaining] = total
        return total

    return count(g.full_mask())


def is_alternating(cycle: tuple[int, ...], matching: Matching) -> bool:
    """True iff the cycle's edges lie alternately in and off the matching."""
    k = len(cycle)
    if k % 2 != 0:
        return False
    statuses = [
        edge_key(cycle[i], cycle[(i + 1) % k]) in matching.edges for i in range(k)
    ]
    return all(statuses[i] != statuses[(i + 1) % k] for i in range(k))


# ---------------------------------------------------------------------------
# Fries structures
# ---------------------------------------------------------------------------


class _FriesSearch:
    """Branch and bound for the maximum number of alternating hexagons."""

    def __init__(self, fullerene):
        self.f = fullerene
        self.edges = fullerene.edges()
        self.eid = {e: i for i, e in enumerate(self.edges)}
        self.adjacency = {
            v: fullerene.rot.neighbors[v] for v in range(fullerene.n)
        }
        self.base_adj = [
            sum(1 << u for u in fullerene.rot.neighbors[v])
            for v in range(fullerene.n)
        ]
        self.full_mask = (1 << fullerene.n) - 1
        # incident edge ids per vertex
        self.vert_edges: list[list[int]] = [[] for _ in range(fullerene.n)]
        for i, (u, v) in enumerate(self.edges):
            self.vert_edges[u].append(i)
            self.vert_edges[v].append(i)
        # hexagon boundary edge ids in cyclic order
        self.hex_ids = list(fullerene.hexagon_ids)
        self.hex_edges: dict[int, list[int]] = {}
        for h in self.hex_ids:
            cyc = fullerene.face_vertices(h)
            self.hex_edges[h] = [
                self.eid[edge_key(cyc[i], cyc[(i + 1) % 6])] for i in range(6)
            ]

    # edge status: 0 undecided, 1 in M, 2 out of M
    def _force_in(self, status: list[int], e: int, trail: list[int]) -> bool:
        if status[e] == 1:
            return True
        if status[e] == 2:
            return False
        status[e] = 1
        trail.append(e)
        u, v = self.edges[e]
        for w in (u, v):
            for other in self.vert_edges[w]:
                if other != e:
                    if status[other] == 1:
                        return False
                    if status[other] == 0:
                        status[other] = 2
                        trail.append(other)
        return True

    def _force_out(self, status: list[int], e: int, trail: list[int]) -> bool:
        if status[e] == 2:
            return True
        if status[e] == 1:
            return False
        status[e] = 2
        trail.append(e)
        return True

    def _apply_orientation(self, status, h: int, parity: int, trail) -> bool:
        for i, e in enumerate(self.hex_edges[h]):
            ok = (
                self._force_in(status, e, trail)
                if i % 2 == parity
                else self._force_out(status, e, trail)
            )
            if not ok:
                return False
        return True

    def _alive(self, status, h: int) -> bool:
        for parity in (0, 1):
            if all(
                status[e] != 2 if i % 2 == parity else status[e] != 1
                for i, e in enumerate(self.hex_edges[h])
            ):
                return True
        return False

    def _feasible(self, status) -> bool:
        # edges forced in pair their endpoints with each other (adjacent
        # edges are forced out by propagation), so both vertices leave;
        # forbidden edges leave the adjacency masks
        adj = list(self.base_adj)
        remaining = self.full_mask
        for i, s in enumerate(status):
            if s == 2:
                u, v = self.edges[i]
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
            elif s == 1:
                u, v = self.edges[i]
                remaining &= ~((1 << u) | (1 << v))
        return pm_exists(adj, remaining)

    def optimum(self) -> int:
        cap = self.f.n // 3
        best = 0
        status = [0] * len(self.edges)

        def rec(idx: int, count: int):
            nonlocal best
            if best >= cap:
                return
            live = [
                h for h in self.hex_ids[idx:] if self._alive(status, h)
            ]
            if count + len(live) <= best:
                return
            if idx == len(self.hex_ids):
                if count > best and self._feasible(status):
                    best = count
                return
            h = self.hex_ids[idx]
            branches = []
            if self._alive(status, h):
                branches = [0, 1]
            for parity in branches:
                trail: list[int] = []
                if self._apply_orientation(status, h, parity, trail) and self._feasible(
                    status
                ):
                    rec(idx + 1, count + 1)
                for e in reversed(trail):
                    status[e] = 0
            rec(idx + 1, count)

        rec(0, 0)
        return best

    def lex_least_witness(self, target: int) -> FriesResult:
        """First perfect matching in edge-id lexicographic order achieving
        the target number of alternating hexagons."""
        m = len(self.edges)
        status = [0] * m

        def upper(status) -> int:
            return sum(1 for h in self.hex_ids if self._alive(status, h))

        def rec(e: int) -> bool:
            if upper(status) < target:
                return False
            if not self._feasible(status):
                return False
            if e == m:
                return True
            for choice in (1, 2):
                trail: list[int] = []
                ok = (
                    self._force_in(status, e, trail)
                    if choice == 1
                    else self._force_out(status, e, trail)
                )
                if ok and rec(e + 1):
                    return True
                for x in reversed(trail):
                    status[x] = 0
            return False

        if not rec(0):
            raise ClarkitError("internal: no witness at the proven optimum")
        edges = frozenset(self.edges[i] for i, s in enumerate(status) if s == 1)
        matching = Matching(edges)
        alternating = frozenset(
            h
            for h in self.hex_ids
            if is_alternating(self.f.face_vertices(h), matching)
        )
        pentagon_edges = {
            edge_key(cyc[i], cyc[(i + 1) % 5])
            for p in self.f.pentagon_ids
            for cyc in (self.f.face_vertices(p),)
            for i in range(5)
        }
        return FriesResult(matching, alternating, not (edges & pentagon_edges))


def fries_number(fullerene) -> tuple[int, FriesResult]:
    """Maximum number of alternating hexagons over all perfect matchings.

    Exact branch and bound; the witness is the lexicographically least
    optimal matching under edge-id order.
    """
    search = _FriesSearch(fullerene)
    best = search.optimum()
    return best, search.lex_least_witness(best)
