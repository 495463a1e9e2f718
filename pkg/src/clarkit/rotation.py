"""Combinatorial embeddings of cubic plane graphs.

A cubic plane graph is stored as a rotation system: for every vertex the
counterclockwise cyclic order of its three neighbours.  Faces are traced
with the "next edge clockwise after the reverse edge" rule, so the face
set is fully determined by the rotation system.  All types are immutable
after construction and safe to share between workers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import EulerViolation, NotCubic, ParseError

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Normalised undirected edge as an ordered pair."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class RotationSystem:
    """Cubic plane graph given by counterclockwise neighbour triples.

    ``neighbors[v]`` is the ordered triple of neighbours of ``v`` in
    counterclockwise order around ``v``.  Construction checks the cubic
    and symmetry invariants; the embedding itself is validated lazily by
    :func:`trace_faces` (Euler's formula).
    """

    n: int
    neighbors: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.n <= 0 or self.n % 2 != 0:
            raise NotCubic(f"vertex count must be positive and even, got {self.n}")
        if len(self.neighbors) != self.n:
            raise NotCubic(f"expected {self.n} neighbour triples, got {len(self.neighbors)}")
        for v, triple in enumerate(self.neighbors):
            if len(triple) != 3 or len(set(triple)) != 3:
                raise NotCubic(f"vertex {v} does not have 3 distinct neighbours: {triple}")
            for u in triple:
                if u == v:
                    raise NotCubic(f"self-loop at vertex {v}")
                if not 0 <= u < self.n:
                    raise NotCubic(f"vertex {v} lists out-of-range neighbour {u}")
                if v not in self.neighbors[u]:
                    raise NotCubic(f"adjacency not symmetric between {v} and {u}")

    @property
    def num_edges(self) -> int:
        return 3 * self.n // 2

    def edges(self) -> list[Edge]:
        """All undirected edges as sorted (u, v) pairs with u < v."""
        return sorted(
            (v, w) for v in range(self.n) for w in self.neighbors[v] if v < w
        )

    def prev_neighbor(self, v: int, u: int) -> int:
        """Neighbour just before u in the counterclockwise order at v."""
        tri = self.neighbors[v]
        return tri[tri.index(u) - 1]

    def next_neighbor(self, v: int, u: int) -> int:
        """Neighbour just after u in the counterclockwise order at v."""
        tri = self.neighbors[v]
        return tri[(tri.index(u) + 1) % 3]

    def relabeled(self, perm: list[int] | tuple[int, ...]) -> "RotationSystem":
        """Image under the vertex permutation v -> perm[v] (same orientation)."""
        new_neighbors: list[tuple[int, int, int]] = [(-1, -1, -1)] * self.n
        for v in range(self.n):
            a, b, c = self.neighbors[v]
            new_neighbors[perm[v]] = (perm[a], perm[b], perm[c])
        return RotationSystem(self.n, tuple(new_neighbors))

    def mirrored(self) -> "RotationSystem":
        """Reversed orientation (every neighbour triple flipped)."""
        return RotationSystem(
            self.n, tuple((c, b, a) for (a, b, c) in self.neighbors)
        )


@dataclass(frozen=True)
class FaceSet:
    """All faces of a traced embedding, each a cyclic vertex sequence."""

    faces: tuple[tuple[int, ...], ...]
    sizes: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "sizes", tuple(len(f) for f in self.faces))

    def __len__(self) -> int:
        return len(self.faces)

    def size_profile(self) -> dict[int, int]:
        profile: dict[int, int] = {}
        for s in self.sizes:
            profile[s] = profile.get(s, 0) + 1
        return profile


@dataclass(frozen=True)
class EdgeCut:
    """An edge cut separating two vertex sets."""

    edges: frozenset[Edge]
    side_a: frozenset[int]
    side_b: frozenset[int]


def trace_faces(rot: RotationSystem) -> FaceSet:
    """Trace all faces of the embedding.

    From the dart u->v the face continues with the dart v->w where w is
    the neighbour just before u in the counterclockwise order at v (the
    next edge clockwise after the reverse edge).  Every dart is used by
    exactly one face; Euler's formula is asserted on the result.
    """
    seen: set[tuple[int, int]] = set()
    faces: list[tuple[int, ...]] = []
    for start_u in range(rot.n):
        for start_v in rot.neighbors[start_u]:
            if (start_u, start_v) in seen:
                continue
            cycle: list[int] = []
            u, v = start_u, start_v
            while (u, v) not in seen:
                seen.add((u, v))
                cycle.append(u)
                u, v = v, rot.prev_neighbor(v, u)
            if (u, v) != (start_u, start_v):
                raise EulerViolation("face walk did not close on its starting dart")
            faces.append(tuple(cycle))
    e = rot.num_edges
    f = len(faces)
    if rot.n - e + f != 2:
        raise EulerViolation(
            f"n - e + f = {rot.n} - {e} + {f} != 2; not a sphere embedding"
        )
    return FaceSet(tuple(faces))


def is_connected(rot: RotationSystem) -> bool:
    seen = [False] * rot.n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        v = stack.pop()
        for u in rot.neighbors[v]:
            if not seen[u]:
                seen[u] = True
                count += 1
                stack.append(u)
    return count == rot.n


def is_three_connected(rot: RotationSystem) -> bool:
    """True iff no vertex cut of size <= 2 disconnects the graph."""
    if rot.n <= 3:
        return False
    if not is_connected(rot):
        return False

    def connected_without(removed: set[int]) -> bool:
        start = next(v for v in range(rot.n) if v not in removed)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in rot.neighbors[v]:
                if u not in removed and u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == rot.n - len(removed)

    for a in range(rot.n):
        if not connected_without({a}):
            return False
    for a in range(rot.n):
        for b in range(a + 1, rot.n):
            if not connected_without({a, b}):
                return False
    return True


def _max_flow_at_least(
    adj: list[list[int]], source_set: set[int], sink_set: set[int], k: int
) -> bool:
    """True iff the max number of edge-disjoint paths source->sink is >= k.

    Unit capacity per undirected edge; BFS augmentation, stopped as soon
    as k paths are found.
    """
    residual: dict[tuple[int, int], int] = {}
    for v, nbrs in enumerate(adj):
        for u in nbrs:
            residual[(v, u)] = 1
    flow = 0
    n = len(adj)
    while flow < k:
        parent: dict[int, int] = {}
        q = deque(source_set)
        reached: int | None = None
        visited = set(source_set)
        while q and reached is None:
            v = q.popleft()
            for u in adj[v]:
                if u in visited or residual[(v, u)] == 0:
                    continue
                visited.add(u)
                parent[u] = v
                if u in sink_set:
                    reached = u
                    break
                q.append(u)
        if reached is None:
            return False
        v = reached
        while v not in source_set:
            p = parent[v]
            residual[(p, v)] -= 1
            residual[(v, p)] += 1
            v = p
        flow += 1
    return flow >= k


def cyclic_edge_connectivity_at_least(rot: RotationSystem, k: int) -> bool:
    """True iff no edge cut of size < k leaves a cycle on both sides.

    Faces are sufficient cycle witnesses in a plane graph, so the check
    runs a unit-capacity max-flow between every pair of vertex-disjoint
    faces with both faces contracted.
    """
    if k <= 1:
        return True
    faces = trace_faces(rot).faces
    face_sets = [set(f) for f in faces]
    for i in range(len(faces)):
        for j in range(i + 1, len(faces)):
            if face_sets[i] & face_sets[j]:
                continue
            if not _max_flow_at_least(
                [list(t) for t in rot.neighbors], face_sets[i], face_sets[j], k
            ):
                return False
    return True


class PlaneSubgraph:
    """Vertex-induced subgraph with inherited cyclic neighbour order.

    Vertices keep their original ids.  Degrees 1 and 2 are permitted;
    this is the working representation for F - H and fragment interiors.
    """

    __slots__ = ("vertices", "adjacency")

    def __init__(self, vertices: frozenset[int], adjacency: dict[int, tuple[int, ...]]):
        self.vertices = vertices
        self.adjacency = adjacency

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[Edge]:
        return sorted(
            (v, u) for v in self.vertices for u in self.adjacency[v] if v < u
        )

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


def induced_subgraph(rot: RotationSystem, vertices) -> PlaneSubgraph:
    """Subgraph induced on ``vertices`` with rotation order restricted."""
    vs = frozenset(vertices)
    adjacency = {
        v: tuple(u for u in rot.neighbors[v] if u in vs) for v in vs
    }
    return PlaneSubgraph(vs, adjacency)


def to_adjacency_text(rot: RotationSystem) -> str:
    """Serialise to the adjacency-list text format.

    First line ``n``, then one line ``v: a b c`` per vertex with the
    counterclockwise neighbour order preserved.  Single spaces, LF line
    endings.
    """
    lines = [str(rot.n)]
    for v in range(rot.n):
        a, b, c = rot.neighbors[v]
        lines.append(f"{v}: {a} {b} {c}")
    return "\n".join(lines) + "\n"


def from_adjacency_text(text: str) -> RotationSystem:
    """Parse the adjacency-list text format (inverse of to_adjacency_text)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty adjacency input")
    try:
        n = int(lines[0].strip())
    except ValueError as exc:
        raise ParseError(f"line 1: expected vertex count, got {lines[0]!r}") from exc
    if len(lines) != n + 1:
        raise ParseError(f"expected {n} adjacency lines, found {len(lines) - 1}")
    neighbors: list[tuple[int, int, int]] = [(-1, -1, -1)] * n
    seen: set[int] = set()
    for idx, line in enumerate(lines[1:], start=2):
        head, sep, tail = line.partition(":")
        if not sep:
            raise ParseError(f"line {idx}: missing ':' in {line!r}")
        try:
            v = int(head.strip())
            nbrs = tuple(int(tok) for tok in tail.split())
        except ValueError as exc:
            raise ParseError(f"line {idx}: bad integer token in {line!r}") from exc
        if not 0 <= v < n:
            raise ParseError(f"line {idx}: vertex {v} out of range 0..{n - 1}")
        if v in seen:
            raise ParseError(f"line {idx}: duplicate vertex {v}")
        if len(nbrs) != 3:
            raise ParseError(f"line {idx}: vertex {v} must list exactly 3 neighbours")
        seen.add(v)
        neighbors[v] = nbrs  # type: ignore[assignment]
    return RotationSystem(n, tuple(neighbors))
