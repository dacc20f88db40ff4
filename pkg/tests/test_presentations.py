import pytest

from colsym.errors import DomainError
from colsym.presentations import (
    Geometry,
    Presentation,
    apply_generator_map,
    classify_geometry,
    rotation_word_as_reflections,
    triangle_group,
    von_dyck_group,
)
from colsym.words import (
    A,
    B,
    C,
    REFLECTIONS,
    ROTATIONS,
    XGEN,
    XINV,
    ZGEN,
    ZINV,
    free_reduce,
    sign_parity,
)


def test_classify_geometry():
    assert classify_geometry(4, 3) is Geometry.SPHERICAL
    assert classify_geometry(3, 5) is Geometry.SPHERICAL
    assert classify_geometry(4, 4) is Geometry.EUCLIDEAN
    assert classify_geometry(3, 6) is Geometry.EUCLIDEAN
    assert classify_geometry(6, 3) is Geometry.EUCLIDEAN
    assert classify_geometry(7, 3) is Geometry.HYPERBOLIC
    assert classify_geometry(5, 4) is Geometry.HYPERBOLIC


def test_triangle_group_relators():
    G = triangle_group(4, 3)
    assert G.alphabet is REFLECTIONS
    assert G.relators == (
        (A, A),
        (B, B),
        (C, C),
        (A, B) * 3,
        (A, C) * 2,
        (B, C) * 4,
    )
    assert G.name == "triangle-4-3"


def test_bad_parameters_rejected():
    for p, q in ((1, 3), (3, 1), (0, 5), (-2, 3)):
        with pytest.raises(DomainError):
            triangle_group(p, q)
        with pytest.raises(DomainError):
            classify_geometry(p, q)


def test_presentation_validation():
    with pytest.raises(DomainError):
        Presentation(REFLECTIONS, ((),), "empty-relator")
    with pytest.raises(DomainError):
        Presentation(REFLECTIONS, ((A, 7),), "bad-letter")


def test_von_dyck_relators():
    vd, sigma = von_dyck_group(7, 3)
    assert vd.alphabet is ROTATIONS
    assert vd.relators == (
        (XGEN,) * 3,
        (ZGEN,) * 7,
        (XGEN, ZGEN) * 2,
    )
    assert set(sigma) == {XGEN, ZGEN}


def test_mirror_twist_is_an_involution():
    # conjugation by a mirror applied twice restores each generator
    _, sigma = von_dyck_group(5, 4)
    for g in (XGEN, ZGEN):
        once = sigma[g]
        twice = apply_generator_map(once, sigma, ROTATIONS)
        assert free_reduce(twice, ROTATIONS) == (g,)


def test_mirror_twist_respects_relators():
    # the image of every relator must again be a relation; verify in the
    # concrete matrix realization, where x = ab and z = bc
    import numpy as np

    from colsym.geometry import fundamental_triangle

    for p, q in ((7, 3), (5, 4), (4, 3)):
        tri = fundamental_triangle(p, q)
        vd, sigma = von_dyck_group(p, q)
        for rel in vd.relators:
            image = apply_generator_map(rel, sigma, ROTATIONS)
            M = tri.word_matrix(rotation_word_as_reflections(image))
            assert np.max(np.abs(M - np.eye(3))) < 1e-9


def test_rotation_word_as_reflections():
    assert rotation_word_as_reflections((XGEN,)) == (A, B)
    assert rotation_word_as_reflections((XINV,)) == (B, A)
    assert rotation_word_as_reflections((ZGEN,)) == (B, C)
    assert rotation_word_as_reflections((ZINV,)) == (C, B)
    assert rotation_word_as_reflections((XGEN, ZGEN)) == (A, C)
    assert sign_parity(rotation_word_as_reflections((XGEN, ZINV, XGEN))) == 0


def test_apply_generator_map_identity():
    w = (XGEN, ZGEN, XINV)
    identity = {XGEN: (XGEN,), ZGEN: (ZGEN,)}
    assert apply_generator_map(w, identity, ROTATIONS) == w
