"""Pentagonal fragments, Clar extensions and the extremality classifier.

A fragment is a face-induced subgraph of a host fullerene (a cycle with
its interior when the face union is simply connected).  This module
extracts pentagon components, builds territories and hexagon extensions
in the host, computes Clar sets of extensions, classifies maximal
pentagonal fragments against the extremal templates, and decides
extremality structurally: every component must match a template, the
per-component Clar sets must assemble compatibly, and the rest of the
graph must be tiled exactly by further disjoint hexagons whose residual
admits a perfect matching.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    ClarkitError,
    NoTwoDegreeVertices,
    NotMaximal,
    WrongOrder,
)
from .fullerene import Fullerene
from .matching import find_matching_covering, find_perfect_matching, pm_exists
from .patches import FragmentTemplate, PatchGraph, pasting_edges_of
from .rotation import Edge, edge_key


@dataclass(frozen=True)
class Fragment:
    """Face-induced subgraph of a host fullerene."""

    faces: frozenset[int]
    boundary: tuple[int, ...] | None  # single cycle when simply connected
    W: frozenset[int]  # 2-degree vertices of the subgraph
    vertices: frozenset[int]

    @property
    def w(self) -> int:
        return len(self.W)

    @property
    def is_disc(self) -> bool:
        return self.boundary is not None


@dataclass(frozen=True)
class PentagonalRing:
    k: int
    pentagons: tuple[int, ...]


@dataclass(frozen=True)
class InnerDual:
    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    min_degree: int


@dataclass(frozen=True)
class BoundaryLabeling:
    sequence: tuple[int, ...]

    def __str__(self) -> str:
        return "".join(str(x) for x in self.sequence)


@dataclass(frozen=True)
class ClarSetResult:
    hexagons: frozenset[int]
    uncovered: frozenset[int]
    normal: bool


@dataclass(frozen=True)
class FragmentClass:
    tag: str  # P, B1, B2, B3, P2, P_B2, P_B2_P, Other
    clar_set: frozenset[int]
    normal: bool


# ---------------------------------------------------------------------------
# fragment construction in the host
# ---------------------------------------------------------------------------


def _subgraph_data(f: Fullerene, face_ids):
    """Vertices, adjacency and boundary edges of a face union."""
    face_ids = frozenset(face_ids)
    edge_count: dict[Edge, int] = {}
    vertices: set[int] = set()
    for fid in face_ids:
        cyc = f.face_vertices(fid)
        vertices.update(cyc)
        for i in range(len(cyc)):
            e = edge_key(cyc[i], cyc[(i + 1) % len(cyc)])
            edge_count[e] = edge_count.get(e, 0) + 1
    adjacency: dict[int, list[int]] = {v: [] for v in vertices}
    for (u, v) in edge_count:
        adjacency[u].append(v)
        adjacency[v].append(u)
    boundary_edges = [e for e, c in edge_count.items() if c == 1]
    return face_ids, vertices, adjacency, edge_count, boundary_edges


def fragment_from_faces(f: Fullerene, face_ids) -> Fragment:
    face_ids, vertices, adjacency, edge_count, boundary_edges = _subgraph_data(
        f, face_ids
    )
    W = frozenset(v for v, ns in adjacency.items() if len(ns) == 2)
    # walk the boundary edges; a disc has a single cycle through them
    boundary = None
    if boundary_edges:
        succ: dict[int, list[int]] = {}
        for u, v in boundary_edges:
            succ.setdefault(u, []).append(v)
            succ.setdefault(v, []).append(u)
        if all(len(x) == 2 for x in succ.values()):
            start = min(succ)
            cycle = [start]
            prev, cur = None, start
            while True:
                a, b = succ[cur]
                nxt = a if a != prev else b
                if nxt == start:
                    break
                cycle.append(nxt)
                prev, cur = cur, nxt
                if len(cycle) > len(boundary_edges):
                    cycle = None  # type: ignore[assignment]
                    break
            if cycle is not None and len(cycle) == len(boundary_edges):
                # Euler check: single boundary cycle and simply connected
                v_n = len(vertices)
                e_n = len(edge_count)
                if v_n - e_n + len(face_ids) == 1:
                    boundary = tuple(cycle)
    return Fragment(face_ids, boundary, W, frozenset(vertices))


def pentagon_components(f: Fullerene) -> list[Fragment]:
    """Connected components of pentagon adjacency, as fragments."""
    pset = set(f.pentagon_ids)
    seen: set[int] = set()
    comps: list[Fragment] = []
    for p in sorted(pset):
        if p in seen:
            continue
        comp = {p}
        stack = [p]
        seen.add(p)
        while stack:
            x = stack.pop()
            for y in f.face_adjacency[x]:
                if y in pset and y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        comps.append(fragment_from_faces(f, comp))
    return comps


def adjoining_faces(f: Fullerene, g: Fragment) -> frozenset[int]:
    """Faces not in the fragment sharing at least one edge with it."""
    out: set[int] = set()
    for fid in g.faces:
        for nb in f.face_adjacency[fid]:
            if nb not in g.faces:
                out.add(nb)
    return frozenset(out)


def territory(f: Fullerene, g: Fragment) -> Fragment:
    return fragment_from_faces(f, g.faces | adjoining_faces(f, g))


def hexagon_extension(f: Fullerene, g: Fragment) -> Fragment | None:
    """Territory when every adjoining face is a hexagon, else None."""
    adj = adjoining_faces(f, g)
    if any(f.face_size(x) != 6 for x in adj):
        return None
    return fragment_from_faces(f, g.faces | adj)


def all_minimal_clar_sets(f: Fullerene, g: Fragment) -> list[ClarSetResult]:
    """Every minimum-|U| Clar set of the fragment's hexagon extension.

    Raises NotMaximal when the extension does not exist.  The search is
    exhaustive over disjoint subsets of the extension's hexagons.
    """
    adj = adjoining_faces(f, g)
    if any(f.face_size(x) != 6 for x in adj):
        raise NotMaximal("fragment has a pentagonal adjoining face")
    candidates = sorted(adj | {x for x in g.faces if f.face_size(x) == 6})
    _, vertices, adjacency, _, _ = _subgraph_data(f, g.faces)
    three_deg = {v for v, ns in adjacency.items() if len(ns) == 3}
    hv = {h: frozenset(f.face_vertices(h)) for h in candidates}
    best_u: int | None = None
    results: list[ClarSetResult] = []
    for r in range(len(candidates) + 1):
        for combo in combinations(candidates, r):
            used: set[int] = set()
            ok = True
            for h in combo:
                if used & hv[h]:
                    ok = False
                    break
                used |= hv[h]
            if not ok:
                continue
            uncovered = vertices - used
            if best_u is not None and len(uncovered) > best_u:
                continue
            sub = {
                v: tuple(x for x in adjacency[v] if x not in used)
                for v in vertices
                if v not in used
            }
            need = [v for v in sub if v in three_deg]
            if find_matching_covering(sub, need) is None:
                continue
            normal = (not sub) or find_perfect_matching(sub) is not None
            if best_u is None or len(uncovered) < best_u:
                best_u = len(uncovered)
                results = []
            if len(uncovered) == best_u:
                results.append(
                    ClarSetResult(frozenset(combo), frozenset(uncovered), normal)
                )
    if best_u is None:
        raise NotMaximal("no hexagon subset admits a covering matching")
    return results


def clar_set(f: Fullerene, g: Fragment) -> ClarSetResult:
    """One minimum Clar set of H[G]: (hexagons, uncovered vertices, normal)."""
    return all_minimal_clar_sets(f, g)[0]


def is_extremal_fragment(f: Fullerene, g: Fragment) -> bool:
    """|U| equals the fragment's pentagon count."""
    pentagons = sum(1 for x in g.faces if f.face_size(x) == 5)
    return len(clar_set(f, g).uncovered) == pentagons


def inner_dual(f: Fullerene, g: Fragment) -> InnerDual:
    """Pentagon-adjacency graph of the fragment."""
    pents = sorted(x for x in g.faces if f.face_size(x) == 5)
    pset = set(pents)
    edges = sorted(
        (p, q)
        for p in pents
        for q in f.face_adjacency[p]
        if q in pset and p < q
    )
    deg = {p: 0 for p in pents}
    for p, q in edges:
        deg[p] += 1
        deg[q] += 1
    return InnerDual(tuple(pents), tuple(edges), min(deg.values()) if deg else 0)


def gamma(f: Fullerene, g: Fragment) -> int:
    return inner_dual(f, g).min_degree


# ---------------------------------------------------------------------------
# pentagonal rings
# ---------------------------------------------------------------------------


def detect_pentagonal_rings(f: Fullerene) -> list[PentagonalRing]:
    """All pentagonal rings R_k (5 <= k <= 12): induced cycles of the
    pentagon adjacency graph, deduplicated up to rotation/reflection."""
    pents = sorted(f.pentagon_ids)
    pset = set(pents)
    padj = {
        p: sorted(q for q in f.face_adjacency[p] if q in pset) for p in pents
    }
    found: dict[tuple[int, ...], tuple[int, ...]] = {}

    def canon(cycle: tuple[int, ...]) -> tuple[int, ...]:
        best = None
        for seq in (cycle, tuple(reversed(cycle))):
            for i in range(len(seq)):
                cand = seq[i:] + seq[:i]
                if best is None or cand < best:
                    best = cand
        return best  # type: ignore[return-value]

    def extend(path: list[int]):
        start = path[0]
        last = path[-1]
        for nxt in padj[last]:
            if nxt == start and len(path) >= 5:
                cycle = tuple(path)
                # induced: consecutive-only adjacency
                ok = True
                k = len(cycle)
                for i in range(k):
                    for j in range(i + 1, k):
                        adjacent = cycle[j] in padj[cycle[i]]
                        consecutive = (j - i == 1) or (i == 0 and j == k - 1)
                        if adjacent != consecutive:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    found.setdefault(canon(cycle), cycle)
            elif nxt > start and nxt not in path and len(path) < 12:
                path.append(nxt)
                extend(path)
                path.pop()

    for p in pents:
        extend([p])
    return [PentagonalRing(len(c), c) for c in sorted(found.values(), key=lambda c: (len(c), c))]


# ---------------------------------------------------------------------------
# boundary labelings
# ---------------------------------------------------------------------------


def cycle_labeling(cycle, degree_of) -> BoundaryLabeling:
    """Degree-saturated path lengths between 2-degree vertices around a
    cycle, rotated/reflected to the lexicographic maximum."""
    k = len(cycle)
    marks = [i for i in range(k) if degree_of(cycle[i]) == 2]
    if not marks:
        raise NoTwoDegreeVertices("cycle has no 2-degree vertices")
    lengths = []
    for a, b in zip(marks, marks[1:] + [marks[0] + k]):
        lengths.append(b - a)
    best = None
    for seq in (lengths, lengths[::-1]):
        for i in range(len(seq)):
            cand = tuple(seq[i:] + seq[:i])
            if best is None or cand > best:
                best = cand
    return BoundaryLabeling(best)  # type: ignore[arg-type]


def boundary_labeling(f: Fullerene, region) -> BoundaryLabeling:
    """Boundary labeling of a Fragment or of an explicit (cycle, degrees).

    A Fragment uses its boundary cycle and subgraph degrees; otherwise
    pass a pair (cycle, degree_map).
    """
    if isinstance(region, Fragment):
        if region.boundary is None:
            raise ClarkitError("fragment has no single boundary cycle")
        _, _, adjacency, _, _ = _subgraph_data(f, region.faces)
        return cycle_labeling(region.boundary, lambda v: len(adjacency[v]))
    cycle, degree_map = region
    return cycle_labeling(tuple(cycle), lambda v: degree_map[v])


def patch_boundary_labeling(patch: PatchGraph) -> BoundaryLabeling:
    return cycle_labeling(patch.outer_walk, patch.degree)


def subgraph_region_labelings(
    f: Fullerene, vertices, drop_edges=()
) -> list[BoundaryLabeling]:
    """Labelings of the non-face regions of a vertex-induced subgraph.

    The subgraph inherits the rotation; every traced cycle that is not a
    face of the host is a region boundary (the outer face and any inner
    gaps), labeled with subgraph degrees.  ``drop_edges`` removes edges
    (e.g. witness-matching edges) before tracing.
    """
    from .patches import _canon_cycle_oriented, _trace_patch_faces

    vs = frozenset(vertices)
    dropped = {edge_key(*e) for e in drop_edges}
    rot = {}
    for v in vs:
        ring = tuple(
            u
            for u in f.rot.neighbors[v]
            if u in vs and edge_key(u, v) not in dropped
        )
        rot[v] = ring
    host_faces = {_canon_cycle_oriented(c) for c in f.faces.faces}
    labelings = []
    for walk in _trace_patch_faces(rot):
        if _canon_cycle_oriented(walk) in host_faces:
            continue
        try:
            labelings.append(cycle_labeling(walk, lambda v: len(rot[v])))
        except NoTwoDegreeVertices:
            continue
    labelings.sort(key=lambda b: (len(b.sequence), b.sequence))
    return labelings


def clar_extension_vertices(f: Fullerene, g: Fragment, cs: ClarSetResult) -> frozenset[int]:
    """Vertex set of the Clar extension C[G] (fragment plus Clar set)."""
    out = set(g.vertices)
    for h in cs.hexagons:
        out.update(f.face_vertices(h))
    return frozenset(out)


# ---------------------------------------------------------------------------
# templates
# ---------------------------------------------------------------------------

_TEMPLATE_FACES: dict[str, tuple[tuple[int, ...], ...]] = {
    "P": ((0, 1, 2, 3, 4),),
    "P2": ((0, 1, 2, 3, 4), (1, 0, 5, 6, 7)),
    "B2": (
        (0, 1, 2, 3, 4),
        (0, 4, 5, 6, 7),
        (7, 6, 8, 9, 10),
        (9, 8, 11, 12, 13),
    ),
    "P_B2": (
        (0, 1, 2, 3, 4),
        (0, 4, 5, 6, 7),
        (7, 6, 8, 9, 10),
        (9, 8, 11, 12, 13),
        (13, 12, 14, 15, 16),
    ),
    "P_B2_P": (
        (0, 1, 2, 3, 4),
        (0, 4, 5, 6, 7),
        (7, 6, 8, 9, 10),
        (9, 8, 11, 12, 13),
        (13, 12, 14, 15, 16),
        (15, 14, 17, 18, 19),
    ),
    "B3": (
        (0, 1, 2, 3, 4),
        (0, 4, 5, 6, 7),
        (7, 6, 8, 9, 10),
        (9, 8, 11, 12, 13),
        (13, 12, 14, 15, 16),
        (11, 8, 6, 5, 17),
    ),
}

_templates_cache: dict[str, FragmentTemplate] | None = None


def templates() -> dict[str, FragmentTemplate]:
    """The extremal pentagonal-fragment templates with pasting edges."""
    global _templates_cache
    if _templates_cache is None:
        out = {}
        for name, faces in _TEMPLATE_FACES.items():
            patch = PatchGraph(faces)
            out[name] = FragmentTemplate(
                name, patch, tuple(pasting_edges_of(patch))
            )
        _templates_cache = out
    return _templates_cache


def template_b1() -> PatchGraph:
    """Two disjoint pentagons joined by an edge."""
    return PatchGraph(
        ((0, 1, 2, 3, 4), (5, 6, 7, 8, 9)), bridges=((0, 5),)
    )


def template_r5() -> PatchGraph:
    """Pentagonal ring R5 as a fragment: five pentagons and the enclosed
    central pentagon."""
    return PatchGraph(
        (
            (0, 1, 2, 3, 4),
            (1, 0, 5, 6, 7),
            (2, 1, 7, 8, 9),
            (3, 2, 9, 10, 11),
            (4, 3, 11, 12, 13),
            (0, 4, 13, 14, 5),
        )
    )


def template_r5_minus() -> PatchGraph:
    """R5 with one 2-degree vertex (and its two edges) removed: the
    central pentagon keeps only four ring pentagons."""
    return PatchGraph(
        (
            (0, 1, 2, 3, 4),
            (1, 0, 5, 6, 7),
            (2, 1, 7, 8, 9),
            (3, 2, 9, 10, 11),
            (4, 3, 11, 12, 13),
        )
    )


def fragment_patch(f: Fullerene, g: Fragment) -> PatchGraph | None:
    """The fragment as a standalone patch, or None when not a disc."""
    try:
        return PatchGraph([f.face_vertices(fid) for fid in sorted(g.faces)])
    except ClarkitError:
        return None


def classify_fragment(f: Fullerene, g: Fragment) -> FragmentClass:
    """Match a maximal pentagonal fragment against the extremal shapes.

    Raises NotMaximal when the fragment has a pentagonal adjoining face.
    """
    sets = all_minimal_clar_sets(f, g)  # NotMaximal propagates
    chosen = sets[0]
    by_size = {1: ("P",), 2: ("P2",), 4: ("B2",), 5: ("P_B2",), 6: ("P_B2_P", "B3")}
    k = len(g.faces)
    tag = "Other"
    names = by_size.get(k, ())
    if names:
        patch = fragment_patch(f, g)
        if patch is not None:
            code = patch.canonical_code()
            for name in names:
                if code == templates()[name].patch.canonical_code():
                    tag = name
                    break
    return FragmentClass(tag, chosen.hexagons, chosen.normal)


# ---------------------------------------------------------------------------
# structural extremality decision
# ---------------------------------------------------------------------------


def theorem2_classify(f: Fullerene) -> bool:
    """Structural extremality decision for n >= 60.

    True iff (1) every pentagon component matches an extremal template;
    (2) compatible minimum Clar sets of the component extensions exist;
    and (3) the complement of the chosen Clar extensions is tiled
    exactly by further disjoint hexagons, the leftover vertices being
    perfectly matchable.  No Clar-number computation is involved.
    """
    if f.n < 60:
        raise WrongOrder(f"theorem applies to n >= 60, got {f.n}")
    comps = pentagon_components(f)
    for g in comps:
        try:
            if classify_fragment(f, g).tag == "Other":
                return False
        except NotMaximal:
            return False
    comp_sets = [all_minimal_clar_sets(f, g) for g in comps]
    comp_vertices = [g.vertices for g in comps]
    return _assemble(f, comps, comp_sets, comp_vertices)


def _assemble(f, comps, comp_sets, comp_vertices) -> bool:
    hv = {h: frozenset(f.face_vertices(h)) for h in f.hexagon_ids}
    adjoin = [adjoining_faces(f, g) & set(f.hexagon_ids) for g in comps]
    all_component_vertices = frozenset().union(*comp_vertices) if comps else frozenset()
    vadj = [sum(1 << u for u in f.rot.neighbors[v]) for v in range(f.n)]

    def cover_exactly(region: frozenset[int]) -> bool:
        """Disjoint hexagons with vertex sets inside the region covering
        it completely."""
        if not region:
            return True
        if len(region) % 6 != 0:
            return False
        candidates = [h for h in f.hexagon_ids if hv[h] <= region]

        def rec(rem: frozenset[int]) -> bool:
            if not rem:
                return True
            v = min(rem)
            for h in candidates:
                if v in hv[h] and hv[h] <= rem:
                    if rec(rem - hv[h]):
                        return True
            return False

        return rec(region)

    chosen_hexes: set[int] = set()
    used_vertices: set[int] = set()

    def place(i: int) -> bool:
        if i == len(comps):
            region = (
                frozenset(range(f.n)) - all_component_vertices - set(used_vertices)
            )
            if not cover_exactly(region):
                return False
            uncovered = 0
            for v in all_component_vertices:
                if v not in used_vertices:
                    uncovered |= 1 << v
            return pm_exists(vadj, uncovered)
        for cs in comp_sets[i]:
            new_hexes = [h for h in cs.hexagons if h not in chosen_hexes]
            # every previously chosen hexagon adjoining this component
            # must belong to its Clar set
            if any(
                h in adjoin[i] and h not in cs.hexagons for h in chosen_hexes
            ):
                continue
            ok = True
            for h in new_hexes:
                if hv[h] & used_vertices:
                    ok = False
                    break
                # a new hexagon may not adjoin an earlier component
                # without being in its chosen set
                for j in range(i):
                    if h in adjoin[j]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            for h in new_hexes:
                chosen_hexes.add(h)
                used_vertices.update(hv[h])
            if place(i + 1):
                return True
            for h in new_hexes:
                chosen_hexes.discard(h)
                used_vertices.difference_update(hv[h])
        return False

    return place(0)
