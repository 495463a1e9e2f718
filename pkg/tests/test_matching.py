import random

from clarkit.fullerene import from_spiral
from clarkit.matching import (
    Matching,
    count_perfect_matchings,
    find_matching_covering,
    find_perfect_matching,
    fries_number,
    is_alternating,
)
from clarkit.rotation import edge_key

# frozen oracle values: exhaustive counts, cross-checked by two
# independent elimination orders in test_counting_order_independent
DODECAHEDRON_PM_COUNT = 36
C60_PM_COUNT = 12500


def cycle_adjacency(k):
    return {i: ((i - 1) % k, (i + 1) % k) for i in range(k)}


def full_adjacency(f):
    return {v: f.rot.neighbors[v] for v in range(f.n)}


def test_single_hexagon_has_two_matchings():
    assert count_perfect_matchings(cycle_adjacency(6)) == 2


def test_odd_cycle_has_no_perfect_matching():
    assert find_perfect_matching(cycle_adjacency(5)) is None
    assert count_perfect_matchings(cycle_adjacency(5)) == 0


def test_dodecahedron_matching_exists(dodeca):
    m = find_perfect_matching(full_adjacency(dodeca))
    assert m is not None
    assert m.is_perfect_on(range(20))


def test_counting_order_independent(dodeca, c60):
    for f, expected in ((dodeca, DODECAHEDRON_PM_COUNT), (c60, C60_PM_COUNT)):
        low = count_perfect_matchings(full_adjacency(f), order="low")
        high = count_perfect_matchings(full_adjacency(f), order="high")
        assert low == high == expected


def test_deletion_contraction_consistency(small_sequences):
    rng = random.Random(5)
    graphs = [from_spiral(s) for s in small_sequences[30]]
    for f in graphs:
        adj = full_adjacency(f)
        total = count_perfect_matchings(adj)
        for _ in range(4):
            u = rng.randrange(f.n)
            v = rng.choice(f.rot.neighbors[u])
            without_e = {
                w: tuple(x for x in adj[w] if edge_key(w, x) != edge_key(u, v))
                for w in adj
            }
            contracted = {
                w: tuple(x for x in adj[w] if x not in (u, v))
                for w in adj
                if w not in (u, v)
            }
            assert total == count_perfect_matchings(
                without_e
            ) + count_perfect_matchings(contracted)


def test_forced_and_forbidden(c60):
    adj = full_adjacency(c60)
    e0 = c60.edges()[0]
    with_forced = find_perfect_matching(adj, forced=[e0])
    assert with_forced is not None and e0 in with_forced.edges
    without = find_perfect_matching(adj, forbidden=[e0])
    assert without is not None and e0 not in without.edges


def test_matching_minus_clar_hexagon_exists(c60):
    # F - H has a perfect matching for a Clar-formula hexagon
    from clarkit.clar import clar_number

    pattern = clar_number(c60, with_formulas=True).formulas[0]
    h = sorted(pattern.hexagons)[0]
    removed = set(c60.face_vertices(h))
    sub = {
        v: tuple(u for u in c60.rot.neighbors[v] if u not in removed)
        for v in range(60)
        if v not in removed
    }
    assert find_perfect_matching(sub) is not None


def test_is_alternating():
    cyc = (0, 1, 2, 3, 4, 5)
    m = Matching(frozenset({(0, 1), (2, 3), (4, 5)}))
    assert is_alternating(cyc, m)
    bad = Matching(frozenset({(0, 1), (1, 2)}))
    assert not is_alternating(cyc, bad)
    assert not is_alternating((0, 1, 2), Matching(frozenset()))


def test_fries_c60(c60):
    count, witness = fries_number(c60)
    assert count == 20 == c60.n // 3
    assert len(witness.alternating_hexagons) == 20
    assert witness.pentagon_free
    for h in witness.alternating_hexagons:
        assert is_alternating(c60.face_vertices(h), witness.matching)
    assert witness.matching.is_perfect_on(range(60))


def test_fries_dodecahedron(dodeca):
    count, witness = fries_number(dodeca)
    assert count == 0
    assert witness.matching.is_perfect_on(range(20))


def test_fries_below_third_of_n(small_sequences):
    for seq in small_sequences[30]:
        f = from_spiral(seq)
        count, witness = fries_number(f)
        assert count <= f.n // 3
        for h in witness.alternating_hexagons:
            assert is_alternating(f.face_vertices(h), witness.matching)


def test_fries_witness_deterministic(c60):
    a = fries_number(c60)[1].matching.edges
    b = fries_number(c60)[1].matching.edges
    assert a == b


def test_matching_covering_required_only():
    path = {0: (1,), 1: (0, 2), 2: (1, 3), 3: (2,)}
    m = find_matching_covering(path, [1, 2])
    assert m is not None
    assert {1, 2} <= m.covered


def test_matching_text_format():
    m = Matching(frozenset({(3, 1), (0, 2)}))
    assert m.to_text() == "0-2\n1-3\n"
