import random
from fractions import Fraction

import pytest

from relmilnor.logder import theta_piece
from relmilnor.milnor import hilbert_fingerprint, jacobian_piece
from relmilnor.oracle import (
    CROSSCHECK_CATALOG,
    _box_monomials,
    _own_rank,
    _own_reduce,
    oracle_fingerprint,
    oracle_ideal_dim,
    oracle_membership_qh,
    oracle_rank_at,
    oracle_tangent_dim,
    oracle_tangent_fields,
    run_crosscheck,
)
from relmilnor.pencil import assemble_pencil
from relmilnor.qpoly import (
    PolyRing,
    WeightSystem,
    parse_poly,
    quasi_degree,
    random_polynomial,
)


class TestDensePrimitives:
    def test_box_monomials(self):
        assert _box_monomials((1, 1), 2) == [(0, 2), (1, 1), (2, 0)]
        assert _box_monomials((2, 3), 6) == [(0, 2), (3, 0)]
        assert _box_monomials((1, 1), -1) == []
        assert _box_monomials((1, 2), 0) == [(0, 0)]

    def test_own_rank(self):
        one = Fraction(1)
        assert _own_rank([[one, one], [one, one]]) == 1
        assert _own_rank([[one, Fraction(0)], [Fraction(0), one]]) == 2
        assert _own_rank([]) == 0

    def test_own_reduce_single_divisor(self):
        # (x^2 y + y) mod (xy): the xy-divisible part drops
        dividend = {(2, 1): Fraction(1), (0, 1): Fraction(1)}
        divisor = {(1, 1): Fraction(1)}
        assert _own_reduce(dividend, divisor) == {(0, 1): Fraction(1)}

    def test_own_reduce_exact_multiple(self):
        dividend = {(2, 1): Fraction(2), (0, 3): Fraction(2)}
        divisor = {(2, 1): Fraction(1), (0, 3): Fraction(1)}
        assert _own_reduce(dividend, divisor) == {}


class TestTangentOracle:
    def test_normal_crossing_dims(self, ring2, w11, phi_xy):
        assert oracle_tangent_dim(phi_xy, w11, 0) == 2
        assert oracle_tangent_dim(phi_xy, w11, 1) == 4
        assert oracle_tangent_dim(phi_xy, w11, -5) == 0

    def test_matches_main_path_across_degrees(self, ring3, w223):
        phi = parse_poly("x^2*y + z^2", ring3)
        for e in range(-3, 7):
            assert theta_piece(phi, w223, e).dim == oracle_tangent_dim(phi, w223, e)

    def test_fields_are_sparse_triples(self, ring2, w11, phi_xy):
        fields = oracle_tangent_fields(phi_xy, w11, 0)
        for field in fields:
            for i, m, c in field:
                assert i in (0, 1)
                assert len(m) == 2
                assert c != 0

    def test_off_lattice_degree_is_empty(self, ring2):
        w = WeightSystem((2, 2))
        phi = parse_poly("x*y", ring2)
        assert oracle_tangent_dim(phi, w, Fraction(1, 2)) == 0


class TestIdealOracle:
    def test_cubic_ranks(self, ring2, w11, phi_xy, f_cubic):
        for m, rank in [(0, 0), (1, 0), (2, 0), (3, 2), (4, 4), (5, 6)]:
            assert oracle_ideal_dim(f_cubic, phi_xy, w11, m) == rank

    def test_matches_main_path(self, ring2, w11, phi_xy, f_cubic):
        for m in range(0, 9):
            assert (
                jacobian_piece(f_cubic, phi_xy, w11, m).rank
                == oracle_ideal_dim(f_cubic, phi_xy, w11, m)
            )

    def test_fingerprint_fixture(self, ring2, w11, phi_xy, f_cubic):
        pairs = oracle_fingerprint(f_cubic, phi_xy, w11, 5)
        assert pairs == [
            (Fraction(0), 1),
            (Fraction(1), 2),
            (Fraction(2), 3),
            (Fraction(3), 2),
            (Fraction(4), 1),
            (Fraction(5), 0),
        ]

    def test_fingerprint_matches_main(self, ring3, w223):
        phi = parse_poly("x^2*y + z^2", ring3)
        fp = hilbert_fingerprint(phi, phi, w223, 8)
        assert list(zip(fp.degrees, fp.dims)) == oracle_fingerprint(phi, phi, w223, 8)


class TestRankAtOracle:
    def test_fixture_ranks(self, ring2, w11, phi_xy):
        f = parse_poly("x^3 + y^3", ring2)
        g = parse_poly("2*x^3 + 5*y^3", ring2)
        mat = assemble_pencil(f, g, phi_xy, w11)
        assert oracle_rank_at(mat, -1) == 1
        assert oracle_rank_at(mat, Fraction(-1, 4)) == 1
        for t in (0, 1, 7):
            assert oracle_rank_at(mat, t) == 2

    def test_agrees_with_evaluate(self, ring2, w11, phi_xy):
        from relmilnor import linalg

        rng = random.Random(7)
        for _ in range(10):
            f = random_polynomial(ring2, w11, 3, rng)
            g = random_polynomial(ring2, w11, 3, rng)
            mat = assemble_pencil(f, g, phi_xy, w11)
            for t in (Fraction(0), Fraction(1), Fraction(3, 2), Fraction(-2)):
                assert oracle_rank_at(mat, t) == linalg.rank(mat.evaluate(t))


class TestMembershipOracle:
    def test_gradient_membership(self, ring2, w11):
        h = parse_poly("x^3 + y^3", ring2)
        gens = [h.diff(0), h.diff(1)]
        assert oracle_membership_qh(parse_poly("x^2", ring2), gens, w11)
        assert oracle_membership_qh(parse_poly("x^2 + 3*y^2", ring2), gens, w11)
        assert not oracle_membership_qh(parse_poly("x*y", ring2), gens, w11)

    def test_zero_always_member(self, ring2, w11):
        assert oracle_membership_qh(ring2.zero(), [parse_poly("x", ring2)], w11)


class TestCatalog:
    def test_entries_are_quasihomogeneous(self):
        for entry in CROSSCHECK_CATALOG:
            ring = PolyRing(entry.variables)
            ws = WeightSystem(entry.weights)
            phi = parse_poly(entry.phi_text, ring)
            assert quasi_degree(phi, ws) is not None
            assert len(entry.weights) == len(entry.variables)
            assert entry.degree_cap > 0


class TestCrosscheck:
    def test_small_sweep_all_match(self):
        results = run_crosscheck(instances=8, seed=3, max_degree=6)
        assert len(results) == 8
        assert all(r.ok for r in results)

    def test_deterministic_per_seed(self):
        a = run_crosscheck(instances=4, seed=9, max_degree=5)
        b = run_crosscheck(instances=4, seed=9, max_degree=5)
        assert [(r.phi, r.f) for r in a] == [(r.phi, r.f) for r in b]

    def test_seeds_differ(self):
        a = run_crosscheck(instances=6, seed=1, max_degree=5)
        b = run_crosscheck(instances=6, seed=2, max_degree=5)
        assert [(r.phi, r.f) for r in a] != [(r.phi, r.f) for r in b]
