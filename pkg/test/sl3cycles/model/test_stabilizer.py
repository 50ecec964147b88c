from fractions import Fraction

import pytest

from sl3cycles.model.apartment import X0, ApartmentVertex, Cell, NotInSector, SectorWindow, eta, y
from sl3cycles.model.matrix import diagonal, elementary
from sl3cycles.model.poly import T
from sl3cycles.model.stabilizer import (
    StabilizerProfile,
    edge_profile,
    enumerate_generators,
    form_parameters,
    membership,
    oracle_stabilizes,
    sample_member,
    sample_violation,
    vertex_profile,
)

V = ApartmentVertex


def test_interior_vertex_profile():
    profile = vertex_profile(V(3, 1))
    assert profile.upper() == (2, 1, 3)
    assert profile.bounds == ((0, 2, 3), (-2, 0, 1), (-3, -1, 0))


def test_standard_vertex_profile_is_sl3_of_z():
    assert vertex_profile(X0).bounds == ((0, 0, 0), (0, 0, 0), (0, 0, 0))


def test_vertex_outside_sector_has_no_profile():
    with pytest.raises(NotInSector):
        vertex_profile(V(0, 1))


def test_flat_edge_profiles():
    for n in range(9):
        assert edge_profile(eta(n)).upper() == (n, n, 2 * n + 1)
        assert edge_profile(Cell.point(y(n))) == edge_profile(eta(n))


def test_profile_of_a_point_is_the_vertex_profile():
    for vertex in (X0, V(3, 1), V(4, 0)):
        assert edge_profile(Cell.point(vertex)) == vertex_profile(vertex)


def test_base_chamber_profile():
    chamber = Cell.chamber(X0, V(1, 0), V(1, 1))
    assert edge_profile(chamber).bounds == ((0, 0, 0), (-1, 0, 0), (-1, -1, 0))


def test_form_parameters():
    assert form_parameters(X0) is None
    assert form_parameters(V(5, 2)) == (3, 2)
    assert form_parameters(V(4, 0)) == (4, 0)
    assert form_parameters(V(3, 3)) == (3, 0)


def test_membership_on_examples():
    profile = vertex_profile(V(3, 1))
    assert membership(elementary(1, 3, T**3), profile)
    assert not membership(elementary(1, 3, T**4), profile)
    assert not membership(elementary(2, 1, 1), profile)
    assert not membership(diagonal(2, 1, 1), profile)
    assert not membership(elementary(1, 2, Fraction(1, 2) * T), profile)


def test_oracle_on_examples():
    assert oracle_stabilizes(elementary(1, 3, T**3), V(3, 1))
    assert not oracle_stabilizes(elementary(1, 3, T**4), V(3, 1))
    assert not oracle_stabilizes(elementary(2, 1, 1), V(3, 1))
    assert oracle_stabilizes(elementary(2, 1, 1), X0)


def test_generators_of_flat_edge():
    generators = enumerate_generators(edge_profile(eta(2)))
    assert len(generators) == 3 + 3 + 6 + 3
    assert elementary(1, 3, T**5) in generators
    assert elementary(1, 3, T**6) not in generators


def test_generators_of_standard_vertex_are_constant():
    for generator in enumerate_generators(vertex_profile(X0)):
        assert all(generator.entry(k, l).degree <= 0 for k in range(3) for l in range(3))
        assert oracle_stabilizes(generator, X0)


def test_generators_fix_their_vertex():
    for vertex in SectorWindow(5).vertices():
        profile = vertex_profile(vertex)
        for generator in enumerate_generators(profile):
            assert membership(generator, profile)
            assert oracle_stabilizes(generator, vertex)


def test_profile_agrees_with_oracle_on_samples(rng):
    for vertex in SectorWindow(6).vertices():
        profile = vertex_profile(vertex)
        for _ in range(10):
            member = sample_member(rng, profile)
            violation = sample_violation(rng, profile)
            assert membership(member, profile) and oracle_stabilizes(member, vertex)
            assert not membership(violation, profile)
            assert not oracle_stabilizes(violation, vertex)


def test_profiles_are_closed_under_multiplication(rng):
    profile = edge_profile(eta(3))
    for _ in range(50):
        assert membership(sample_member(rng, profile) @ sample_member(rng, profile), profile)


def test_meet_is_entrywise_minimum():
    first = StabilizerProfile(((0, 1, 2), (0, 0, 0), (0, 0, 0)))
    second = StabilizerProfile(((0, 2, 1), (-1, 0, 0), (0, 0, 0)))
    assert first.meet(second).bounds == ((0, 1, 1), (-1, 0, 0), (0, 0, 0))
