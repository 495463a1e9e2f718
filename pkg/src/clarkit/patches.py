"""Plane patches: face-glued fragments independent of any host fullerene.

A patch is a connected plane graph with maximum degree 3 given by its
inner faces (counterclockwise vertex cycles; shared edges traversed
oppositely) plus optional bridge edges lying on no inner face.  The
rotation system is derived from the face cycles, the outer walk is
traced from it, and the forced hexagon extension is built purely
combinatorially: one hexagon per degree-saturated boundary segment,
consecutive hexagons sharing the outward edge at each 2-degree vertex.
This realises the fragment calculus (territories, Clar extensions,
pasting) without reference to a particular fullerene.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ClarkitError, IncompatibleOrientation, NotMaximal
from .matching import find_matching_covering, find_perfect_matching
from .rotation import Edge, edge_key


class PatchGraph:
    """Plane patch built from inner-face cycles and bridge edges."""

    def __init__(self, faces, bridges=()):
        self.faces: tuple[tuple[int, ...], ...] = tuple(tuple(f) for f in faces)
        self.bridges: tuple[Edge, ...] = tuple(edge_key(*b) for b in bridges)
        self.rot: dict[int, tuple[int, ...]] = _derive_rotation(
            self.faces, self.bridges
        )
        self.vertices: tuple[int, ...] = tuple(sorted(self.rot))
        walks = _trace_patch_faces(self.rot)
        remaining: dict[tuple[int, ...], int] = {}
        for f in self.faces:
            key = _canon_cycle_oriented(f)
            remaining[key] = remaining.get(key, 0) + 1
        outer = []
        for w in walks:
            key = _canon_cycle_oriented(w)
            if remaining.get(key, 0) > 0:
                remaining[key] -= 1
            else:
                outer.append(w)
        if any(remaining.values()):
            raise ClarkitError("face cycles are not consistently oriented")
        if len(outer) != 1:
            raise ClarkitError(
                f"patch is not a disc: {len(outer)} boundary walks"
            )
        self.outer_walk: tuple[int, ...] = outer[0]

    # -- basic structure ----------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def adjacency(self) -> dict[int, tuple[int, ...]]:
        return dict(self.rot)

    def edges(self) -> list[Edge]:
        return sorted(
            {edge_key(u, v) for u in self.rot for v in self.rot[u]}
        )

    def two_degree_vertices(self) -> list[int]:
        return [v for v in self.vertices if self.degree(v) == 2]

    @property
    def w(self) -> int:
        return len(self.two_degree_vertices())

    def pentagon_faces(self) -> list[tuple[int, ...]]:
        return [f for f in self.faces if len(f) == 5]

    def hexagon_faces(self) -> list[tuple[int, ...]]:
        return [f for f in self.faces if len(f) == 6]

    def face_adjacent_pairs(self) -> set[tuple[int, int]]:
        """Indices of inner-face pairs sharing at least one edge."""
        by_edge: dict[Edge, list[int]] = {}
        for i, f in enumerate(self.faces):
            for j in range(len(f)):
                by_edge.setdefault(edge_key(f[j], f[(j + 1) % len(f)]), []).append(i)
        out = set()
        for ids in by_edge.values():
            for a, b in combinations(sorted(set(ids)), 2):
                out.add((a, b))
        return out

    def inner_dual_min_degree(self) -> int:
        """Minimum pentagon-adjacency degree (gamma) over pentagon faces."""
        pent_idx = [i for i, f in enumerate(self.faces) if len(f) == 5]
        pairs = self.face_adjacent_pairs()
        deg = {i: 0 for i in pent_idx}
        for a, b in pairs:
            if a in deg and b in deg:
                deg[a] += 1
                deg[b] += 1
        if not deg:
            return 0
        return min(deg.values())

    # -- boundary segments and hexagon extension ----------------------------

    def boundary_segments(self) -> list[tuple[int, ...]]:
        """Degree-saturated boundary paths between 2-degree walk positions.

        Each segment is the vertex path from one 2-degree vertex to the
        next along the outer walk; interior vertices are all 3-degree.
        """
        walk = self.outer_walk
        L = len(walk)
        marks = [i for i in range(L) if self.degree(walk[i]) == 2]
        if not marks:
            return []
        segs = []
        for a, b in zip(marks, marks[1:] + [marks[0] + L]):
            segs.append(tuple(walk[i % L] for i in range(a, b + 1)))
        return segs

    def extend_hexagons(self) -> "PatchGraph | None":
        """The forced all-hexagon extension, or None when impossible.

        Deep pockets are filled first: a degree-saturated path of length
        4 takes a hexagon with a single new apex (which becomes a fresh
        2-degree vertex), length 5 closes with a hexagon on the path
        itself.  Once every segment has length at most 3, each segment
        takes one hexagon and consecutive hexagons share the outward
        edge at their common 2-degree vertex.  Segments longer than 5
        admit no face at all (faces have size at most six).
        """
        patch = self
        guard = 0
        while True:
            segs = patch.boundary_segments()
            if not segs or len(segs) < 2:
                return None
            if any(len(s) - 1 > 5 for s in segs):
                return None
            pocket = next((s for s in segs if len(s) - 1 in (4, 5)), None)
            if pocket is None:
                break
            label = max(patch.vertices) + 1
            if len(pocket) - 1 == 4:
                cycle = tuple(pocket) + (label,)
            else:
                cycle = tuple(pocket)
            try:
                patch = PatchGraph(list(patch.faces) + [cycle], patch.bridges)
            except ClarkitError:
                return None
            guard += 1
            if guard > 4 * len(self.faces) + 16:
                return None
        segs = patch.boundary_segments()
        label = max(patch.vertices) + 1
        k = len(segs)
        tvert = list(range(label, label + k))
        label += k
        new_faces = list(patch.faces)
        for j, seg in enumerate(segs):
            ell = len(seg) - 1
            t_start = tvert[j]
            t_end = tvert[(j + 1) % k]
            own = [label + i for i in range(3 - ell)]
            label += 3 - ell
            new_faces.append(tuple(seg) + (t_end, *own, t_start))
        try:
            return PatchGraph(new_faces, patch.bridges)
        except ClarkitError:
            return None

    # -- Clar sets -----------------------------------------------------------

    def clar_sets(self):
        """All minimum-|U| Clar sets of the hexagon extension.

        Returns (sets, u_size, extension) where each set is a tuple of
        face cycles (hexagons of the extension or of the patch itself),
        or raises NotMaximal when no hexagon extension exists.
        """
        ext = self.extend_hexagons()
        if ext is None:
            raise NotMaximal("patch has no hexagon extension")
        own = len(self.faces)
        candidates = [f for f in ext.faces[own:]] + self.hexagon_faces()
        my_vertices = set(self.vertices)
        adj = self.adjacency()
        three_deg = {v for v in self.vertices if self.degree(v) == 3}
        best_u = None
        best: list[tuple[tuple[int, ...], ...]] = []
        for r in range(len(candidates), -1, -1):
            for combo in combinations(candidates, r):
                used: set[int] = set()
                ok = True
                for cyc in combo:
                    cs = set(cyc)
                    if used & cs:
                        ok = False
                        break
                    used |= cs
                if not ok:
                    continue
                u = len(my_vertices - used)
                if best_u is not None and u > best_u:
                    continue
                sub = {
                    v: tuple(x for x in adj[v] if x not in used)
                    for v in my_vertices
                    if v not in used
                }
                need = [v for v in sub if v in three_deg]
                if find_matching_covering(sub, need) is None:
                    continue
                if best_u is None or u < best_u:
                    best_u = u
                    best = [combo]
                elif u == best_u:
                    best.append(combo)
        if best_u is None:
            raise NotMaximal("no hexagon subset admits a covering matching")
        return best, best_u, ext

    def clar_set(self):
        """One minimum Clar set: (hexagons, u_size, normal, extension)."""
        sets, u, ext = self.clar_sets()
        chosen = sets[0]
        return chosen, u, self._is_normal(chosen), ext

    def _is_normal(self, hexagons) -> bool:
        used = {v for cyc in hexagons for v in cyc}
        adj = self.adjacency()
        sub = {
            v: tuple(x for x in adj[v] if x not in used)
            for v in self.vertices
            if v not in used
        }
        if not sub:
            return True
        return find_perfect_matching(sub) is not None

    def is_extremal(self) -> bool:
        """|U| equals the number of pentagon faces (enclosed ones included)."""
        _, u, _ = self.clar_sets()
        return u == len(self.pentagon_faces())

    # -- isomorphism ----------------------------------------------------------

    def canonical_code(self) -> tuple:
        """Embedding-aware certificate; equal codes iff isomorphic patches.

        BFS codes over all outer-walk starting darts in both senses; the
        inner-face size multiset pins the face structure.
        """
        best = None
        darts = []
        L = len(self.outer_walk)
        for i in range(L):
            u, v = self.outer_walk[i], self.outer_walk[(i + 1) % L]
            darts.append((u, v))
            darts.append((v, u))
        for (u, v) in darts:
            for flip in (False, True):
                code = _bfs_code(self.rot, u, v, flip)
                if best is None or code < best:
                    best = code
        sizes = tuple(sorted(len(f) for f in self.faces))
        return (sizes, len(self.bridges), best)

    def is_isomorphic(self, other: "PatchGraph") -> bool:
        return self.canonical_code() == other.canonical_code()

    def relabeled(self, offset: int) -> "PatchGraph":
        return PatchGraph(
            [tuple(v + offset for v in f) for f in self.faces],
            [(u + offset, v + offset) for u, v in self.bridges],
        )


def _canon_cycle_oriented(cyc) -> tuple[int, ...]:
    """Rotation-invariant (orientation-preserving) key of a cycle."""
    cyc = tuple(cyc)
    best = None
    for i in range(len(cyc)):
        cand = cyc[i:] + cyc[:i]
        if best is None or cand < best:
            best = cand
    return best


def _derive_rotation(faces, bridges) -> dict[int, tuple[int, ...]]:
    """Rotation system from CCW inner faces plus bridge edges.

    Each face passing u -> v -> w records that at v the neighbour u
    follows w counterclockwise; the relations are stitched into one
    cyclic order per vertex, bridge neighbours filling the free slot.
    """
    nbrs: dict[int, set[int]] = {}
    succ: dict[int, dict[int, int]] = {}
    for f in faces:
        k = len(f)
        for i in range(k):
            u, v, w = f[i], f[(i + 1) % k], f[(i + 2) % k]
            nbrs.setdefault(v, set()).update((u, w))
            table = succ.setdefault(v, {})
            if table.get(w, u) != u:
                raise ClarkitError(f"conflicting rotation at vertex {v}")
            table[w] = u  # u follows w counterclockwise at v
    for u, v in bridges:
        nbrs.setdefault(u, set()).add(v)
        nbrs.setdefault(v, set()).add(u)
    rot: dict[int, tuple[int, ...]] = {}
    for v, ns in nbrs.items():
        if len(ns) > 3:
            raise ClarkitError(f"vertex {v} has degree {len(ns)} > 3")
        table = succ.get(v, {})
        if len(ns) <= 2:
            rot[v] = tuple(sorted(ns))
            continue
        missing_keys = [x for x in sorted(ns) if x not in table]
        while missing_keys:
            values = set(table.values())
            missing_vals = [x for x in sorted(ns) if x not in values]
            if len(missing_keys) == 1:
                table[missing_keys[0]] = missing_vals[0]
            elif len(missing_keys) == 2:
                # one neighbour is on no face (a bridge); slot it between
                # the two open wedge ends
                floating = [x for x in missing_keys if x not in values]
                if len(floating) != 1:
                    raise ClarkitError(f"underdetermined rotation at vertex {v}")
                c = floating[0]
                a = next(x for x in missing_keys if x != c)
                table[a] = c
            else:
                raise ClarkitError(f"underdetermined rotation at vertex {v}")
            missing_keys = [x for x in sorted(ns) if x not in table]
        start = min(ns)
        order = [start]
        while len(order) < 3:
            order.append(table[order[-1]])
        if len(set(order)) != 3:
            raise ClarkitError(f"conflicting rotation at vertex {v}")
        rot[v] = tuple(order)
    return rot


def _patch_prev(rot, v: int, u: int) -> int:
    ring = rot[v]
    if len(ring) == 1:
        return ring[0]
    return ring[ring.index(u) - 1]


def _trace_patch_faces(rot) -> list[tuple[int, ...]]:
    seen: set[tuple[int, int]] = set()
    walks = []
    for a in sorted(rot):
        for b in rot[a]:
            if (a, b) in seen:
                continue
            cyc = []
            u, v = a, b
            while (u, v) not in seen:
                seen.add((u, v))
                cyc.append(u)
                u, v = v, _patch_prev(rot, v, u)
            walks.append(tuple(cyc))
    return walks


def _bfs_code(rot, u0: int, v0: int, flip: bool) -> tuple:
    order = {u0: 0}
    queue = [(u0, v0)]
    code = []
    qi = 0
    while qi < len(queue):
        v, anchor = queue[qi]
        qi += 1
        ring = list(rot[v])
        if flip:
            ring.reverse()
        if anchor in ring:
            i = ring.index(anchor)
            ring = ring[i:] + ring[:i]
        entry = [len(ring)]
        for w in ring:
            if w not in order:
                order[w] = len(order)
                queue.append((w, v))
            entry.append(order[w])
        code.append(tuple(entry))
    return tuple(code)


def paste(
    x: PatchGraph,
    y: PatchGraph,
    ex: Edge,
    ey: Edge,
    orientation: int | None = None,
) -> PatchGraph:
    """Identify edge ey of y with edge ex of x and take the union.

    ``orientation`` chooses which endpoint pairs up with which (None
    tries both); raises IncompatibleOrientation when the identified
    union is not a plane patch with consistent faces.
    """
    offset = max(x.vertices) + 1
    y2 = y.relabeled(offset)
    ey2 = (ey[0] + offset, ey[1] + offset)
    choices = (0, 1) if orientation is None else (orientation,)
    last: ClarkitError | None = None
    for choice in choices:
        if choice == 0:
            mapping = {ey2[0]: ex[0], ey2[1]: ex[1]}
        else:
            mapping = {ey2[0]: ex[1], ey2[1]: ex[0]}
        faces = list(x.faces) + [
            tuple(mapping.get(v, v) for v in f) for f in y2.faces
        ]
        bridges = list(x.bridges) + [
            edge_key(mapping.get(u, u), mapping.get(v, v)) for u, v in y2.bridges
        ]
        try:
            return PatchGraph(faces, bridges)
        except ClarkitError as exc:
            last = exc
    raise IncompatibleOrientation(str(last)) from last


@dataclass(frozen=True)
class FragmentTemplate:
    """Named patch with its Clar-set data and designated pasting edges."""

    name: str
    patch: PatchGraph
    pasting_edges: tuple[Edge, ...]

    @property
    def num_pentagons(self) -> int:
        return len(self.patch.pentagon_faces())


def pasting_edges_of(patch: PatchGraph) -> list[Edge]:
    """Edges of the patch on the Clar-extension boundary with both ends
    in the Clar set, collected over every minimum Clar set."""
    sets, _, _ = patch.clar_sets()
    found: set[Edge] = set()
    boundary_edges = set()
    walk = patch.outer_walk
    for i in range(len(walk)):
        boundary_edges.add(edge_key(walk[i], walk[(i + 1) % len(walk)]))
    for chosen in sets:
        covered_vertices = {v for cyc in chosen for v in cyc}
        covered_edges = set()
        for cyc in chosen:
            for i in range(len(cyc)):
                covered_edges.add(edge_key(cyc[i], cyc[(i + 1) % len(cyc)]))
        for e in boundary_edges:
            if e in covered_edges:
                continue
            if e[0] in covered_vertices and e[1] in covered_vertices:
                found.add(e)
    return sorted(found)
