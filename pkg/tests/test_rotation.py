import pytest
from hypothesis import given

from gemdual.generators import bouquet_rotation, k4_rotation, theta_rotation
from gemdual.rotation import (
    RotationEmbedding,
    RotationError,
    canonical_rotation,
    euler_characteristic,
    faces,
    is_orientable,
    petrie_walks,
)

from conftest import rotations
from oracles import face_count, petrie_walk_count


def test_build_assigns_ids_in_order_of_appearance():
    rot = RotationEmbedding.build({"u": [("x", 0), ("y", 0)], "w": [("y", 1), ("x", 1)]})
    assert rot.edge_names == ("x", "y")
    assert rot.vertices == (((0, 0), (1, 0)), ((1, 1), (0, 1)))
    assert rot.endpoints(1) == (0, 1)


@pytest.mark.parametrize(
    "vertices, sigs, message",
    [
        ((((0, 0),),), (1,), "has 1 dart"),
        ((((0, 0), (0, 0), (0, 1)),), (1,), "appears twice"),
        ((((0, 0), (0, 1)),), (2,), "signature"),
        ((((0, 0), (0, 1)), ((1, 0), (1, 1))), (1, 1), "disconnected"),
        ((), (), "at least one edge"),
    ],
)
def test_invalid_rotations_rejected(vertices, sigs, message):
    with pytest.raises(RotationError, match=message):
        RotationEmbedding(vertices, sigs)


def test_unknown_signature_rejected():
    with pytest.raises(RotationError, match="unknown edge"):
        RotationEmbedding.build({"u": [("a", 0), ("a", 1)]}, {"b": -1})


def test_face_counts_of_small_embeddings():
    assert len(faces(theta_rotation(3))) == 3
    assert len(faces(k4_rotation())) == 4
    assert len(faces(bouquet_rotation([1, 1]))) == 1
    assert len(faces(bouquet_rotation([-1]))) == 1
    assert euler_characteristic(bouquet_rotation([1, 1])) == 0


def test_orientability():
    assert is_orientable(k4_rotation())
    assert not is_orientable(bouquet_rotation([-1]))
    # flipping both ends of a path of twisted edges is still orientable
    rot = RotationEmbedding((((0, 0),), ((0, 1), (1, 0)), ((1, 1),)), (-1, -1))
    assert is_orientable(rot)


@given(rotations())
def test_face_tracing_matches_oracle(rot):
    assert len(faces(rot)) == face_count(rot.vertices, rot.signatures)
    assert len(petrie_walks(rot)) == petrie_walk_count(rot)


@given(rotations())
def test_face_walks_cover_each_dart_side_once(rot):
    total = sum(len(w) for w in faces(rot))
    assert total == 2 * rot.edge_count


@given(rotations())
def test_canonical_rotation_equivalent_and_idempotent(rot):
    can = canonical_rotation(rot)
    assert sorted(len(f) for f in faces(can)) == sorted(len(f) for f in faces(rot))
    assert is_orientable(can) == is_orientable(rot)
    assert euler_characteristic(can) == euler_characteristic(rot)
    assert canonical_rotation(can) == can
    # tree edges come out untwisted, so an orientable input has no twisted edges left
    if is_orientable(rot):
        assert set(can.signatures) == {1}
