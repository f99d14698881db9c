import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hochschild.simplex import (
    MonotoneMap,
    all_monotone,
    check_simplicial_identities,
    compose_maps,
    degeneracy,
    face,
    factorize,
    identity_map,
    random_monotone,
    recompose,
)


def test_face_and_degeneracy_values():
    assert face(2, 2).values == (0, 1)
    assert face(0, 2).values == (1, 2)
    assert degeneracy(0, 1).values == (0, 0, 1)
    assert degeneracy(1, 1).values == (0, 1, 1)


def test_rejects_bad_maps():
    with pytest.raises(ValueError):
        MonotoneMap(1, 2, (2, 1))
    with pytest.raises(ValueError):
        MonotoneMap(1, 1, (0, 2))
    with pytest.raises(ValueError):
        face(3, 2)
    with pytest.raises(ValueError):
        compose_maps(face(0, 2), face(0, 3))


def test_composition_pointwise():
    f = compose_maps(face(1, 3), face(0, 2))
    assert f.values == tuple(face(1, 3)(face(0, 2)(j)) for j in range(2))
    assert f.values == (2, 3)
    g = face(0, 3)
    assert compose_maps(identity_map(3), g) == g == compose_maps(g, identity_map(2))


def test_factorize_examples():
    assert factorize(identity_map(3)) == ([], [])
    assert factorize(face(1, 3)) == ([(1, 3)], [])
    f = MonotoneMap(1, 1, (0, 0))
    faces, degs = factorize(f)
    assert recompose(faces, degs, 1) == f
    assert faces == [(1, 1)] and degs == [(0, 0)]


def test_identities_exhaustive():
    r = check_simplicial_identities(6)
    assert r.ok and len(r.checks) > 100


def test_factorize_all_small_maps():
    for k in range(4):
        for l in range(4):
            for f in all_monotone(k, l):
                faces, degs = factorize(f)
                assert recompose(faces, degs, k) == f
                idx = [i for i, _ in faces]
                assert idx == sorted(idx, reverse=True) and len(set(idx)) == len(idx)
                idx = [i for i, _ in degs]
                assert idx == sorted(idx) and len(set(idx)) == len(idx)


@given(st.integers(0, 7), st.integers(0, 7), st.randoms(use_true_random=False))
def test_factorize_roundtrip(k, l, rng):
    f = random_monotone(rng, k, l)
    faces, degs = factorize(f)
    assert recompose(faces, degs, k) == f
    assert len(faces) - len(degs) == l - k


def test_all_monotone_count():
    # binomial(k + l + 1, k + 1) maps [k] -> [l]
    from math import comb
    for k in range(4):
        for l in range(4):
            assert len(list(all_monotone(k, l))) == comb(k + l + 1, k + 1)


def test_random_monotone_seeded():
    a = random_monotone(random.Random(3), 4, 4)
    b = random_monotone(random.Random(3), 4, 4)
    assert a == b
