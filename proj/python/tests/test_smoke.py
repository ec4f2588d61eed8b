import math

import numpy as np
import pytest

import cetqft


def test_quantum_integers():
    assert cetqft.q_int(1, 5) == pytest.approx(1.0)
    for r in range(3, 9):
        for n in range(1, r):
            assert cetqft.q_int(n, r) == pytest.approx(cetqft.q_int(r - n, r))
    assert cetqft.fusion_range(2, 2, 5) == [1, 3]


def test_torus_s_matrix():
    for r in range(3, 8):
        S = cetqft.torus_S(r)
        assert S.shape == (r - 1, r - 1)
        assert np.allclose(S.conj().T @ S, np.eye(r - 1), atol=1e-9)
        trig = np.array([[math.sqrt(2 / r) * math.sin(a * b * math.pi / r) for b in range(1, r)] for a in range(1, r)])
        assert np.allclose(np.abs(S), np.abs(trig), atol=1e-9)


def test_relations():
    ids = cetqft.relation_ids()
    assert len(ids) == 19
    reports = cetqft.verify_all(4)
    assert all(rep["pass"] for rep in reports)
    off = cetqft.verify("3a", 4, signs_on=False)
    assert not off["pass"] and off["residual"] >= 0.5


def test_surfaces():
    genus2 = (
        "pants P1 slots(1:e,2:e,3:a)\n"
        "pants P2 slots(1:a,2:e,3:a)\n"
        "circle P1.1 ~ P2.1\n"
        "circle P1.2 ~ P1.3\n"
        "circle P2.2 ~ P2.3\n"
    )
    assert cetqft.validate_surface(genus2) == []
    assert cetqft.dim_V(genus2, [], 3) == 4
    assert cetqft.dim_V("annulus A1 slots(1:e,2:e)\ncircle A1.1 ~ A1.2\n", [], 6) == 5
    n = cetqft.normalize_surface(genus2)
    assert cetqft.normalize_surface(n) == n
    with pytest.raises(ValueError):
        cetqft.dim_V("pants P1 slots(1:e,2:e,3:e)\npants P2 slots(1:e,2:e,3:e)\ncircle P1.1 ~ P2.1\n", [1, 1, 1, 1], 3)


def test_invariants():
    for r in (3, 4, 5):
        X = math.sqrt(r / 2) / math.sin(math.pi / r)
        z, _ = cetqft.invariant_closed("", r)
        assert z == pytest.approx(1 / X)
        z, _ = cetqft.invariant_closed("S", r)
        assert z == pytest.approx(1 / X**2)
    C = cetqft.scalar_C(5)
    z0, _ = cetqft.invariant_closed("S T^2 S", 5)
    z1, _ = cetqft.invariant_closed("S T^2 S", 5, framing=1)
    assert abs(z1 - C * z0) < 1e-12


def test_framing():
    assert cetqft.wall_sigma([[1, 0]], [[0, 1]], [[1, 1]]) == 1
    assert cetqft.wall_sigma([[1, 0]], [[1, 0]], [[0, 1]]) == 0
    assert cetqft.word_framing("S T S") == -1
    with pytest.raises(ValueError):
        cetqft.word_framing("S Q")
