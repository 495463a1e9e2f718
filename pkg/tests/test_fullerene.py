import random

import pytest

from clarkit.errors import (
    BadFaceSizes,
    SpiralDoesNotClose,
    WrongPentagonCount,
)
from clarkit.fullerene import (
    SpiralSequence,
    canonical_form,
    dodecahedron,
    from_spiral,
    is_isomorphic,
    spiral_of_pentagon_positions,
    tube_c70,
    validate,
)

F60_B3_A = (1, 2, 3, 4, 7, 10, 23, 26, 29, 30, 31, 32)
F60_B3_B = (1, 2, 3, 4, 7, 10, 25, 28, 29, 30, 31, 32)


def test_validate_c60(c60):
    assert c60.n == 60
    assert len(c60.pentagon_ids) == 12
    assert len(c60.hexagon_ids) == 20


def test_validate_dodecahedron(dodeca):
    assert dodeca.n == 20
    assert len(dodeca.pentagon_ids) == 12
    assert len(dodeca.hexagon_ids) == 0


def test_pentagon_hexagon_accounting(small_sequences):
    for n, seqs in small_sequences.items():
        for seq in seqs[:3]:
            f = from_spiral(seq)
            assert len(f.pentagon_ids) == 12
            assert len(f.hexagon_ids) == n // 2 - 10


def test_spiral_rejects_wrong_pentagon_count():
    with pytest.raises(WrongPentagonCount):
        SpiralSequence((5,) * 13)
    with pytest.raises(BadFaceSizes):
        SpiralSequence((5,) * 11 + (4, 5))


def test_from_spiral_matches_hand_built_c60(c60, c60_rot_by_hand):
    independent = validate(c60_rot_by_hand)
    assert is_isomorphic(c60, independent)


def test_canonical_form_is_class_function(c60):
    rng = random.Random(3)
    base = canonical_form(c60)
    for _ in range(100):
        perm = list(range(60))
        rng.shuffle(perm)
        relabeled = validate(c60.rot.relabeled(perm))
        assert canonical_form(relabeled) == base


def test_canonical_form_identifies_mirror(c60):
    assert canonical_form(validate(c60.rot.mirrored())) == canonical_form(c60)


def test_dodecahedron_canonical_is_all_fives(dodeca):
    assert canonical_form(dodeca).spiral == (5,) * 12


def test_is_isomorphic_discriminates(c60, dodeca):
    assert is_isomorphic(c60, c60)
    assert not is_isomorphic(c60, dodeca)


def test_b3_pair_distinct():
    f1 = from_spiral(spiral_of_pentagon_positions(32, F60_B3_A))
    f2 = from_spiral(spiral_of_pentagon_positions(32, F60_B3_B))
    assert not is_isomorphic(f1, f2)


def test_round_trip_spiral(small_sequences):
    for seq in small_sequences[28]:
        f = from_spiral(seq)
        assert canonical_form(f).spiral == seq


def test_tube_c70_validates():
    f = tube_c70()
    assert f.n == 70
    assert len(f.pentagon_ids) == 12


def test_spiral_text_round_trip():
    s = SpiralSequence((5,) * 12)
    assert SpiralSequence.parse(str(s)) == s


def test_infeasible_sequence_raises():
    with pytest.raises(SpiralDoesNotClose):
        from_spiral(spiral_of_pentagon_positions(13, range(1, 13)))
