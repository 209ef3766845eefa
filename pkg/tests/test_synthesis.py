import math

import pytest

import oracles
from latmark.binomial import Binomial
from latmark.errors import DimensionError, NotInLatticeError
from latmark.lattice import canonicalize, is_member, zero_lattice
from latmark.synthesis import (
    INFINITE,
    class_cardinality,
    class_leq,
    fiber_descriptor,
    indispensables_general,
    lift_binomial,
    markov_basis_general,
    markov_failures,
    minimal_coset_points,
    universal_markov_finite,
    verify_generating_set,
    verify_markov_general,
)

from conftest import WORKED_ROWS

E = [tuple(int(i == j) for j in range(5)) for i in range(5)]
Z2 = (0, 0)


def B(plus, minus):
    return Binomial(plus, minus)


def mono(**exps):
    v = [0] * 5
    for k, e in exps.items():
        v[int(k[1:]) - 1] = e
    return tuple(v)


def test_x4_staircase(worked):
    fd = fiber_descriptor(worked, E[3])
    assert set(fd.min_generators) == {mono(x2=2, x3=1), mono(x1=3, x3=1), mono(x4=1)}
    # projections onto x3, x4, x5: x4 and x3
    assert set(fd.projected_fiber.elements) == {(0, 1, 0), (1, 0, 0)}
    assert fd.t_value == 2


def test_x5_projected_fiber(worked):
    fd = fiber_descriptor(worked, E[4])
    expected = {(0, 0, 1)} | {(k, 6 - k, 0) for k in range(7)}
    assert set(fd.projected_fiber.elements) == expected
    assert len(fd.min_generators) == 14
    assert fd.t_value == 2
    assert fd.gamma_components == ((0,), tuple(range(1, 8)))


@pytest.mark.parametrize("u,bound", [(E[3], 4), (E[2], 4), (E[0], 5), (E[4], 6)])
def test_min_generators_by_box(worked, u, bound):
    # nonnegative points of u + L in a box, minimal under the componentwise order
    pts = [
        v for v in oracles.box(5, 0, bound) if oracles.member(WORKED_ROWS[:2] + [(1, 1, 0, 0, 0), (5, 0, 0, 0, 0)], [a - b for a, b in zip(v, u)])
    ]
    minimal = {v for v in pts if not any(w != v and all(a <= b for a, b in zip(w, v)) for w in pts)}
    fd = fiber_descriptor(worked, u)
    assert {v for v in fd.min_generators if max(v) <= bound} == minimal


def test_sim_classes_share_projection(worked):
    fd = fiber_descriptor(worked, E[4])
    for p, cls in zip(fd.projected_fiber.elements, fd.sim_classes):
        assert cls and all(v[2:] == p for v in cls)


def test_descriptor_errors(worked):
    with pytest.raises(DimensionError):
        fiber_descriptor(worked, (1, 0))
    with pytest.raises(ValueError):
        fiber_descriptor(worked, (-1, 0, 0, 0, 0))


def test_minimal_coset_points(plane):
    assert minimal_coset_points(plane, (0, 0)) == [(0, 0)]
    assert minimal_coset_points(plane, (1, 0)) == [(0, 4), (1, 0)]
    assert sorted(minimal_coset_points(plane, (2, 0))) == [(0, 3), (2, 0)]


def test_class_cardinality(worked, plane, diagonal, macaulay):
    assert class_cardinality(worked) == 5
    assert class_cardinality(plane) == 5
    assert class_cardinality(diagonal) == INFINITE and math.isinf(class_cardinality(diagonal))
    assert class_cardinality(macaulay) == 1


def test_class_leq(worked):
    f4 = fiber_descriptor(worked, E[3])
    f5 = fiber_descriptor(worked, E[4])
    assert class_leq(worked, f4, f5)
    assert not class_leq(worked, f5, f4)
    assert class_leq(worked, f4, f4)
    classes = markov_basis_general(worked).class_multiset
    assert class_leq(worked, classes[1], classes[0])


def test_lift_binomial(worked):
    b = lift_binomial(worked, (0, 1), (1, -1, 0))
    assert b == B(mono(x2=2, x3=1), mono(x4=1))
    b = lift_binomial(worked, (0, 1), (6, 0, -1))
    assert is_member(worked, b.vector) and b.minus == mono(x5=1)
    assert b.plus[2:] == (6, 0, 0)
    with pytest.raises(NotInLatticeError):
        lift_binomial(worked, (0, 1), (1, 0, 0))


def test_markov_report(worked):
    r = markov_basis_general(worked)
    assert r.mu == 4 and r.rank_pure == 2
    assert {str(b) for b in r.pure_part} == {"x1*x2 - 1", "x1^5 - 1"}
    assert [c.t_value for c in r.class_multiset] == [2, 2]
    assert all(c.class_cardinality == 5 for c in r.class_multiset)
    assert r.is_ci and not r.universal_markov_finite
    assert verify_markov_general(worked, r.basis)


def test_worked_verification(worked):
    x1x2, x15 = B(Z := (0,) * 5, mono(x1=1, x2=1)), B(Z, mono(x1=5))
    b3 = B(mono(x4=1), mono(x2=2, x3=1))
    b10 = B(mono(x5=1), mono(x2=1, x3=6))
    assert verify_markov_general(worked, [x1x2, x15, b3, b10])
    assert verify_generating_set(worked, [x1x2, x15, b3, b10])
    assert not verify_generating_set(worked, [x1x2, x15, b3])
    fails = markov_failures(worked, [x1x2, x15, b3, b10, B(mono(x4=1), mono(x1=3, x3=1))])
    assert fails[0] == "cardinality exceeds mu: 5 > 4"


def test_plane_verification(plane):
    one = Z2
    assert markov_basis_general(plane).mu == 2
    for S in (
        [B(one, (1, 1)), B(one, (5, 0))],
        [B(one, (1, 1)), B((3, 0), (0, 2))],
        [B(one, (2012, 2017)), B((0, 4), (2013, 2022))],
    ):
        assert verify_markov_general(plane, S)
    three = [B(one, (2, 2)), B(one, (3, 3)), B(one, (5, 0))]
    assert not verify_markov_general(plane, three)
    assert verify_generating_set(plane, three)
    with pytest.raises(NotInLatticeError):
        verify_markov_general(plane, [B((0, 1), (1, 0))])


def test_macaulay_verification(macaulay):
    r = markov_basis_general(macaulay)
    assert r.mu == 4 and not r.is_ci and r.universal_markov_finite
    assert verify_markov_general(macaulay, r.basis)
    assert not verify_markov_general(macaulay, r.basis[:3])
    assert verify_generating_set(macaulay, r.basis + (r.basis[0],))
    assert not verify_markov_general(macaulay, r.basis + (r.basis[0],))


def test_indispensables(worked, diagonal, macaulay):
    assert indispensables_general(worked) == ([], [(0,) * 5])
    assert indispensables_general(diagonal) == ([B((1, 1), Z2)], [(1, 1), Z2])
    assert indispensables_general(zero_lattice(3)) == ([], [])
    bins, mons = indispensables_general(macaulay)
    assert len(bins) == 4 and len(mons) == 8


def test_universal_markov_finite(worked, plane, diagonal, macaulay):
    assert not universal_markov_finite(worked)
    assert not universal_markov_finite(plane)
    assert universal_markov_finite(diagonal)
    assert universal_markov_finite(macaulay)
    # rank one pure part next to a nonzero projected lattice
    assert not universal_markov_finite(canonicalize([(1, 1, 0, 0), (0, 1, -1, 1)], 4))


def test_mu_identity(worked, plane, diagonal, macaulay):
    for L in (worked, plane, diagonal, macaulay):
        r = markov_basis_general(L)
        assert r.mu == r.rank_pure + sum(c.t_value - 1 for c in r.class_multiset)
