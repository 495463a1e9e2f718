"""Face-spiral windup and unwinding for fullerene duals.

The dual of a fullerene is a sphere triangulation whose vertices are the
faces (degree 5 or 6).  Winding a spiral adds one dual vertex at a time:
the new vertex is coned over a contiguous arc of the boundary cycle of
the already-built disc, the arc always spanning the junction between the
most recently placed open face and the oldest open face.  Faces whose
last free valence is consumed become arc interiors and leave the
boundary; the machine is fully deterministic given the size sequence.

Unwinding runs the same machine against a concrete triangulation: the
next face is forced by the junction edge, every gluing is verified
against the real adjacency, so a successful unwind is exactly a size
sequence whose windup reproduces the graph.  The canonical spiral is the
lexicographically smallest successful unwinding over all starts and both
senses, which identifies mirror images.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoSpiralFound, SpiralDoesNotClose

# Comparison outcomes for unwinding against a reference sequence.
GREATER = 1
EQUAL = 0
SMALLER = -1


@dataclass(frozen=True)
class Triangulation:
    """Wound-up dual: vertex sizes, adjacency and oriented triangles."""

    sizes: tuple[int, ...]
    triangles: tuple[tuple[int, int, int], ...]

    @property
    def num_faces(self) -> int:
        return len(self.sizes)

    def adjacency_sets(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in self.sizes]
        for a, b, c in self.triangles:
            adj[a].update((b, c))
            adj[b].update((a, c))
            adj[c].update((a, b))
        return adj

    def third_map(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """For each dual edge (a, b) with a < b, the sorted pair of
        triangle apexes on its two sides."""
        third: dict[tuple[int, int], list[int]] = {}
        for a, b, c in self.triangles:
            for u, v, w in ((a, b, c), (b, c, a), (c, a, b)):
                key = (u, v) if u < v else (v, u)
                third.setdefault(key, []).append(w)
        return {k: tuple(sorted(v)) for k, v in third.items()}


class _Machine:
    """Incremental windup state over a prescribed or fed size sequence."""

    __slots__ = ("free", "bnd", "triangles", "count")

    def __init__(self) -> None:
        self.free: list[int] = []
        self.bnd: list[int] = []
        self.triangles: list[tuple[int, int, int]] = []
        self.count = 0

    def place(self, size: int, final: bool) -> bool:
        """Glue the next dual vertex of the given size; False on failure.

        Returns the arc consistency implicitly: callers needing the arc
        members use :meth:`place_with_arc`.
        """
        return self.place_with_arc(size, final) is not None

    def place_with_arc(self, size: int, final: bool) -> list[int] | None:
        c = self.count
        if c == 0:
            self.free.append(size)
            self.bnd.append(0)
            self.count = 1
            return []
        if c == 1:
            self.free[0] -= 1
            self.free.append(size - 1)
            self.bnd.append(1)
            self.count = 2
            return [0]
        bnd = self.bnd
        free = self.free
        if final:
            if len(bnd) != size:
                return None
            if any(free[x] != 1 for x in bnd):
                return None
            for x in bnd:
                free[x] = 0
            arc = list(bnd)
            for i in range(len(arc)):
                self.triangles.append((arc[i], arc[(i + 1) % len(arc)], c))
            self.free.append(0)
            bnd.clear()
            self.count += 1
            return arc
        # Absorb saturating faces at the outer end of the junction.
        right: list[int] = []
        while bnd and free[bnd[-1]] == 1:
            right.append(bnd.pop())
        if not bnd:
            return None
        start = bnd[-1]
        # Absorb saturating faces at the inner end.
        left: list[int] = []
        while len(bnd) > 1 and free[bnd[0]] == 1:
            left.append(bnd.pop(0))
        far = bnd[0]
        if far == start or free[far] == 1:
            return None
        arc = [start] + right[::-1] + left + [far]
        t = len(arc)
        remaining = size - t
        if remaining < 1:
            return None
        free[start] -= 1
        free[far] -= 1
        for x in right:
            free[x] = 0
        for x in left:
            free[x] = 0
        for i in range(t - 1):
            self.triangles.append((arc[i], arc[i + 1], c))
        self.free.append(remaining)
        bnd.append(c)
        self.count += 1
        return arc

    def snapshot(self) -> tuple[list[int], list[int], int, int]:
        return (list(self.free), list(self.bnd), len(self.triangles), self.count)

    def restore(self, snap: tuple[list[int], list[int], int, int]) -> None:
        free, bnd, ntri, count = snap
        self.free = list(free)
        self.bnd = list(bnd)
        del self.triangles[ntri:]
        self.count = count


def wind_up(sizes) -> Triangulation:
    """Wind a face-size sequence into a sphere triangulation.

    Raises SpiralDoesNotClose when the sequence is infeasible.
    """
    sizes = tuple(sizes)
    f = len(sizes)
    if f < 4:
        raise SpiralDoesNotClose(f"need at least 4 faces, got {f}")
    machine = _Machine()
    for i, s in enumerate(sizes):
        if not machine.place(s, final=(i == f - 1)):
            raise SpiralDoesNotClose(f"spiral fails while adding face {i}")
    return Triangulation(sizes, tuple(machine.triangles))


def wind_up_or_none(sizes) -> Triangulation | None:
    try:
        return wind_up(sizes)
    except SpiralDoesNotClose:
        return None


@dataclass(frozen=True)
class DualGraph:
    """Concrete dual triangulation of an embedded cubic graph."""

    sizes: tuple[int, ...]
    adj: tuple[frozenset[int], ...]
    third: dict[tuple[int, int], tuple[int, ...]]

    @classmethod
    def from_triangulation(cls, tri: Triangulation) -> "DualGraph":
        return cls(
            tri.sizes,
            tuple(frozenset(s) for s in tri.adjacency_sets()),
            tri.third_map(),
        )


def unwind(
    dual: DualGraph,
    f1: int,
    f2: int,
    sense: int,
    reference: tuple[int, ...] | None = None,
) -> tuple[int, tuple[int, ...] | None]:
    """Unwind one spiral from the start (f1, f2, sense).

    Returns (cmp, sequence) where cmp compares the produced sequence with
    ``reference`` (EQUAL when no reference given and the unwind worked).
    A geometric failure returns (GREATER, None): a failed start can never
    witness a smaller spiral.  When the running prefix is already greater
    than the reference the unwind aborts early.
    """
    sizes = dual.sizes
    f = len(sizes)
    machine = _Machine()
    machine.place(sizes[f1], False)
    machine.place(sizes[f2], False)
    pos2face = [f1, f2]
    placed = {f1, f2}
    verdict = EQUAL
    if reference is not None:
        for i, face in enumerate(pos2face):
            if sizes[face] != reference[i]:
                verdict = SMALLER if sizes[face] < reference[i] else GREATER
                break
        if verdict == GREATER:
            return GREATER, None
    for step in range(2, f):
        a = pos2face[machine.bnd[-1]]
        b = pos2face[machine.bnd[0]]
        key = (a, b) if a < b else (b, a)
        pair = dual.third.get(key)
        if pair is None:
            return GREATER, None
        if step == 2:
            cand = pair[sense] if len(pair) > 1 else pair[0]
            if cand in placed:
                return GREATER, None
        else:
            unplaced = [x for x in pair if x not in placed]
            if len(unplaced) != 1:
                return GREATER, None
            cand = unplaced[0]
        size = sizes[cand]
        if reference is not None and verdict == EQUAL:
            if size > reference[step]:
                return GREATER, None
            if size < reference[step]:
                verdict = SMALLER
        arc = machine.place_with_arc(size, final=(step == f - 1))
        if arc is None:
            return GREATER, None
        cadj = dual.adj[cand]
        for x in arc:
            if pos2face[x] not in cadj:
                return GREATER, None
        pos2face.append(cand)
        placed.add(cand)
    return verdict, tuple(sizes[x] for x in pos2face)


def spiral_starts(dual: DualGraph):
    """All (f1, f2, sense) unwind starts, pentagons first."""
    order = sorted(range(len(dual.sizes)), key=lambda x: (dual.sizes[x], x))
    for f1 in order:
        for f2 in sorted(dual.adj[f1], key=lambda x: (dual.sizes[x], x)):
            yield f1, f2, 0
            yield f1, f2, 1


def canonical_spiral(dual: DualGraph) -> tuple[int, ...]:
    """Lexicographically smallest successful unwinding (mirror included)."""
    best: tuple[int, ...] | None = None
    for f1, f2, sense in spiral_starts(dual):
        if best is not None and dual.sizes[f1] > best[0]:
            break  # starts are size-sorted; nothing later can win
        _, seq = unwind(dual, f1, f2, sense, reference=best)
        if seq is not None and (best is None or seq < best):
            best = seq
    if best is None:
        raise NoSpiralFound("no spiral start unwinds this graph")
    return best


def is_canonical_sequence(tri: Triangulation, seq: tuple[int, ...]) -> bool:
    """True iff no unwinding of the wound graph is smaller than seq."""
    dual = DualGraph.from_triangulation(tri)
    for f1, f2, sense in spiral_starts(dual):
        if dual.sizes[f1] > seq[0]:
            break
        cmp, out = unwind(dual, f1, f2, sense, reference=seq)
        if cmp == SMALLER and out is not None:
            return False
    return True


def enumerate_spirals_py(num_faces: int, num_pentagons: int = 12):
    """Yield every canonical windable size sequence, in lexicographic order.

    Reference backtracking enumerator (pure Python).  Used for small n
    and as a cross-check of the compiled kernel; the production path is
    clarkit.enumeration.
    """
    machine = _Machine()
    seq: list[int] = []

    def rec(pent_left: int, hex_left: int):
        depth = len(seq)
        final = depth == num_faces - 1
        for size, left in ((5, pent_left), (6, hex_left)):
            if left == 0:
                continue
            snap = machine.snapshot()
            if machine.place(size, final):
                seq.append(size)
                if final:
                    tri = Triangulation(tuple(seq), tuple(machine.triangles))
                    if is_canonical_sequence(tri, tuple(seq)):
                        yield tuple(seq)
                else:
                    yield from rec(
                        pent_left - (size == 5), hex_left - (size == 6)
                    )
                seq.pop()
            machine.restore(snap)

    yield from rec(num_pentagons, num_faces - num_pentagons)
