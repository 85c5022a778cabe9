"""Group structure: generators, cobordance decisions, sign-assignment solvers."""

import random

import pytest

from cuspcobord import (
    BoundaryCriticalPoint,
    CobordismClass,
    MorseDescriptor,
    NoSolution,
    PreconditionError,
    SignAssignment,
    chi_plus_sigma,
    cobordism_invariant,
    disjoint_union,
    generator,
    is_cobordant,
    realize_sign_assignment,
    reverse,
    solve_sigma_for_target,
    validate,
)

from _enumeration import random_descriptor


class TestGenerator:
    def test_shape(self):
        d = generator(3)
        assert validate(d).ok
        assert d.chi_M == 1
        assert [(p.mu, p.sigma) for p in d.boundary] == [(0, 1), (2, 1)]

    def test_invariant_values(self):
        # frozen: 1 - (1 + (-1)^(n-1)) is 1 for even n and -1 for odd n
        for n in (2, 4, 6):
            assert cobordism_invariant(generator(n)) == CobordismClass.of(n, 1)
        for n in (3, 5, 7):
            assert cobordism_invariant(generator(n)) == CobordismClass.of(n, -1)

    def test_generates_even_group(self):
        g = generator(2)
        double = disjoint_union(g, g)
        assert is_cobordant(double, MorseDescriptor.empty(2))

    def test_generates_odd_group(self):
        g = generator(3)
        total = MorseDescriptor.empty(3)
        for k in range(1, 4):
            total = disjoint_union(total, g)
            assert cobordism_invariant(total).value == -k

    def test_reversal_gives_the_inverse_class(self):
        for n in (2, 3, 4, 5):
            g = generator(n)
            both = disjoint_union(g, reverse(g))
            assert is_cobordant(both, MorseDescriptor.empty(n))

    def test_dimension_below_two_rejected(self):
        with pytest.raises(PreconditionError):
            generator(1)


class TestIsCobordant:
    def test_equivalence_relation_on_samples(self):
        rng = random.Random(5)
        for n in (2, 3):
            ds = [random_descriptor(n, rng) for _ in range(8)]
            for a in ds:
                assert is_cobordant(a, a)
                for b in ds:
                    assert is_cobordant(a, b) == is_cobordant(b, a)
                    assert is_cobordant(a, b) == (
                        cobordism_invariant(a) == cobordism_invariant(b))

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(PreconditionError):
            is_cobordant(MorseDescriptor.empty(2), MorseDescriptor.empty(4))


class TestRealize:
    def test_overrides_signs_and_validates(self):
        pts = (BoundaryCriticalPoint("x0", 0, 1),
               BoundaryCriticalPoint("x1", 1, 1))
        sigma = SignAssignment({"x0": 1, "x1": -1})
        d = realize_sign_assignment(pts, sigma, n=2, chi_M=1)
        assert [p.sigma for p in d.boundary] == [1, -1]
        assert validate(d).ok

    def test_domain_mismatch_rejected(self):
        pts = (BoundaryCriticalPoint("x0", 0, 1),)
        with pytest.raises(PreconditionError):
            realize_sign_assignment(pts, SignAssignment({"y": 1}), 2, 0)


class TestSolver:
    def test_finds_assignment_hitting_target(self):
        pts = (BoundaryCriticalPoint("x0", 0, 1),
               BoundaryCriticalPoint("x1", 1, 1),
               BoundaryCriticalPoint("x2", 2, 1),
               BoundaryCriticalPoint("x3", 1, 1))
        for value in (-2, -1, 0, 1, 2):
            target = CobordismClass.of(3, value)
            got = solve_sigma_for_target(pts, 3, 1, target)
            if isinstance(got, NoSolution):
                continue
            cp = chi_plus_sigma(pts, got)
            assert 1 - cp == value

    def test_exhaustive_matches_attainable_set(self):
        pts = (BoundaryCriticalPoint("x0", 0, 1),
               BoundaryCriticalPoint("x1", 2, 1))
        # chi_plus ranges over {0, 1, 2}: both mu even, none odd
        reachable = set()
        for v in range(-5, 6):
            got = solve_sigma_for_target(pts, 3, 1, CobordismClass.of(3, v))
            if isinstance(got, SignAssignment):
                reachable.add(v)
            else:
                assert v not in got.attainable
        assert reachable == {1 - cp for cp in (0, 1, 2)}

    def test_no_solution_reports_attainable_values(self):
        got = solve_sigma_for_target((), 3, 1, CobordismClass.of(3, 5))
        assert isinstance(got, NoSolution)
        assert got.attainable == (1,)

    def test_large_boundary_uses_direct_construction(self):
        pts = tuple(BoundaryCriticalPoint(f"x{k}", k % 3, 1)
                    for k in range(24))
        target = CobordismClass.of(3, -4)
        got = solve_sigma_for_target(pts, 3, 1, target)
        assert isinstance(got, SignAssignment)
        assert 1 - chi_plus_sigma(pts, got) == -4

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(PreconditionError):
            solve_sigma_for_target((), 2, 0, CobordismClass.of(3, 0))
