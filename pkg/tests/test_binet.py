import math
import random

import pytest

from rotorcalc.binet import (
    binet2,
    binet3,
    closed_term,
    component,
    m_form,
    solve_weights,
    verify,
)
from rotorcalc.errors import (
    ArityMismatch,
    DegenerateRoots,
    DomainError,
    SingularSystem,
    UnsupportedDegree,
)
from rotorcalc.recurrence import Recurrence, iterate
from rotorcalc.roots import cubic_resolvents

FIB = Recurrence((1, 1), (0, 1))
LUCAS = Recurrence((1, 1), (2, 1))
TRIB = Recurrence((1, 1, 1), (0, 1, 1))
TRI_LUCAS = Recurrence((1, 1, 1), (3, 1, 3))
TETRA = Recurrence((1, 1, 1, 1), (0, 0, 0, 1))

SQRT5 = math.sqrt(5)


def random_integral(rng, order):
    return Recurrence(
        tuple(rng.randint(-3, 3) for _ in range(order)),
        tuple(rng.randint(-3, 3) for _ in range(order)),
    )


class TestSolveWeights:
    def test_fibonacci_weights(self):
        form = solve_weights(FIB)
        assert abs(form.weights[0] - 1 / SQRT5) < 1e-12
        assert abs(form.weights[1] + 1 / SQRT5) < 1e-12
        assert abs(form.weights[2]) < 1e-12

    def test_lucas_weights(self):
        form = solve_weights(LUCAS)
        assert abs(form.weights[0] - 1) < 1e-12
        assert abs(form.weights[1] - 1) < 1e-12
        assert abs(form.weights[2]) < 1e-12

    def test_order_one(self):
        form = solve_weights(Recurrence((2,), (3,)))
        assert abs(form.roots.roots[0] - 2) < 1e-10
        assert abs(form.weights[0] - 3) < 1e-9
        assert abs(form.weights[1]) < 1e-9

    def test_root_at_one_is_singular(self):
        with pytest.raises(SingularSystem):
            solve_weights(Recurrence((0, 1), (1, 1)))

    def test_degenerate_checked_before_singular(self):
        # (x-1)^2: the double root must win over the root-at-1 report
        with pytest.raises(DegenerateRoots):
            solve_weights(Recurrence((-1, 2), (0, 1)))


class TestClosedTerm:
    def test_fibonacci_term(self):
        form = solve_weights(FIB)
        tv = closed_term(form, 10)
        assert abs(tv.value - 55) <= 1e-9 * 55
        assert tv.nearest == 55
        assert tv.distance <= 1e-9

    def test_term_zero(self):
        form = solve_weights(FIB)
        assert closed_term(form, 0).nearest == 0

    def test_non_integral_has_no_snap(self):
        form = solve_weights(Recurrence((0.5, 1), (1, 1)))
        tv = closed_term(form, 6)
        assert tv.nearest is None
        assert tv.distance is None

    def test_snap_matches_exact_iterate(self):
        rng = random.Random(6021)
        checked = 0
        while checked < 40:
            rec = random_integral(rng, rng.randint(2, 4))
            try:
                form = solve_weights(rec)
            except DomainError:
                continue
            exact = iterate(rec, 21)
            if max(abs(v) for v in exact) > 10 ** 9:
                continue
            for k in (0, 3, 11, 20):
                assert closed_term(form, k).nearest == exact[k]
            checked += 1


class TestBinet2:
    def test_fibonacci_all_k(self):
        exact = iterate(FIB, 71)
        for k, want in enumerate(exact):
            got = binet2(FIB, k)
            assert round(got) == want
            assert abs(got - want) <= 1e-9 * max(1, abs(want))

    def test_lucas_all_k(self):
        exact = iterate(LUCAS, 71)
        for k, want in enumerate(exact):
            got = binet2(LUCAS, k)
            assert round(got) == want
            assert abs(got - want) <= 1e-9 * max(1, abs(want))

    def test_wrong_order(self):
        with pytest.raises(ArityMismatch):
            binet2(TRIB, 3)

    def test_degenerate(self):
        with pytest.raises(DegenerateRoots):
            binet2(Recurrence((-1, 2), (0, 1)), 5)

    def test_complex_roots_give_real_terms(self):
        rec = Recurrence((-2, 1), (1, 1))
        exact = iterate(rec, 25)
        for k, want in enumerate(exact):
            assert abs(binet2(rec, k) - want) <= 1e-9 * max(1, abs(want))


class TestBinet3:
    def test_tribonacci(self):
        exact = iterate(TRIB, 51)
        for k, want in enumerate(exact):
            got = binet3(TRIB, k)
            assert abs(got - want) <= 1e-8 * max(1, abs(want))
        assert round(binet3(TRIB, 10)) == 149

    def test_tri_lucas(self):
        exact = iterate(TRI_LUCAS, 51)
        for k, want in enumerate(exact):
            got = binet3(TRI_LUCAS, k)
            assert abs(got - want) <= 1e-8 * max(1, abs(want))
        assert round(binet3(TRI_LUCAS, 6)) == 39

    def test_wrong_order(self):
        with pytest.raises(ArityMismatch):
            binet3(FIB, 3)

    def test_degenerate(self):
        with pytest.raises(DegenerateRoots):
            binet3(Recurrence((0, 0, 0), (1, 2, 3)), 4)


class TestMForm:
    def test_fibonacci_coefficients(self):
        mf = m_form(FIB)
        assert mf.order == 2
        assert mf.coefficients[0] == 0j          # x0/2
        assert abs(mf.coefficients[1] - 1 / SQRT5) < 1e-12
        assert abs(mf.evaluate(10) - 55) < 1e-9

    def test_lucas_coefficients(self):
        mf = m_form(LUCAS)
        assert abs(mf.coefficients[0] - 1) < 1e-12   # x0/2 = 1
        assert abs(mf.coefficients[1]) < 1e-12
        assert abs(mf.evaluate(10) - 123) < 1e-9

    def test_tribonacci_reproduces_sequence(self):
        mf = m_form(TRIB)
        exact = iterate(TRIB, 51)
        for k, want in enumerate(exact):
            assert abs(mf.evaluate(k) - want) <= 1e-8 * max(1, abs(want))

    def test_tetranacci_reproduces_sequence(self):
        mf = m_form(TETRA)
        exact = iterate(TETRA, 41)
        for k, want in enumerate(exact):
            assert abs(mf.evaluate(k) - want) <= 1e-8 * max(1, abs(want))

    def test_signature_shapes(self):
        mf = m_form(TETRA)
        assert len(mf.signatures) == 4
        assert all(len(sig) == 4 for sig in mf.signatures)
        assert len(mf.coefficients) == 4
        assert len(mf.roots) == 4

    def test_agrees_with_weights_path(self):
        rng = random.Random(777)
        checked = 0
        while checked < 30:
            rec = random_integral(rng, rng.randint(2, 4))
            try:
                form = solve_weights(rec)
                mf = m_form(rec)
            except DomainError:
                continue
            for k in (0, 5, 12, 20):
                a = closed_term(form, k).value
                b = mf.evaluate(k)
                assert abs(a - b) <= 1e-6 * max(1.0, abs(a))
            checked += 1

    def test_unsupported_orders(self):
        with pytest.raises(UnsupportedDegree):
            m_form(Recurrence((2,), (1,)))
        with pytest.raises(UnsupportedDegree):
            m_form(Recurrence((1, 0, 0, 0, 1), (0, 1, 2, 3, 4)))

    def test_degenerate(self):
        with pytest.raises(DegenerateRoots):
            m_form(Recurrence((-1, 2), (0, 1)))


class TestComponents:
    def test_order2_components_are_fib_and_lucas(self):
        fib_seq = iterate(FIB, 21)
        lucas_seq = iterate(LUCAS, 21)
        for k in range(21):
            assert abs(component(FIB, "F", k) - fib_seq[k]) < 1e-9
            assert abs(component(FIB, "L", k) - lucas_seq[k]) < 1e-9

    def test_order3_symmetric_component(self):
        tl = iterate(TRI_LUCAS, 21)
        for k in range(21):
            assert abs(component(TRIB, "C", k) - tl[k]) < 1e-8 * max(1, abs(tl[k]))

    def test_order3_signed_components_at_one(self):
        res = cubic_resolvents(1, 1, 1)
        s1, s2 = res.sigmas
        d = s1 ** 3 - s2 ** 3
        assert abs(component(TRIB, "A", 1) - s2 / d) < 1e-10
        assert abs(component(TRIB, "B", 1) - s1 / d) < 1e-10

    def test_wrong_order(self):
        with pytest.raises(ArityMismatch):
            component(TRIB, "F", 2)
        with pytest.raises(ArityMismatch):
            component(FIB, "A", 2)
        with pytest.raises(ArityMismatch):
            component(FIB, "X", 2)

    def test_degenerate(self):
        with pytest.raises(DegenerateRoots):
            component(Recurrence((-1, 2), (0, 1)), "F", 3)


class TestVerify:
    def test_fibonacci(self):
        report = verify(FIB, 70, 1e-8)
        assert report.passed
        assert set(report.paths) == {"weights", "binet2", "m_form"}
        assert all(p.max_rel_err <= 1e-12 for p in report.paths.values())

    def test_tribonacci(self):
        report = verify(TRIB, 50, 1e-8)
        assert report.passed
        assert set(report.paths) == {"weights", "binet3", "m_form"}

    def test_tetranacci(self):
        report = verify(TETRA, 40, 1e-8)
        assert report.passed
        assert set(report.paths) == {"weights", "m_form"}

    def test_order_five_weights_only(self):
        rec = Recurrence((1, 0, 0, 1, 1), (0, 1, 2, 3, 4))
        report = verify(rec, 20, 1e-6)
        assert set(report.paths) == {"weights"}
        assert report.passed

    def test_propagates_solver_errors(self):
        with pytest.raises(DegenerateRoots):
            verify(Recurrence((-1, 2), (0, 1)), 10, 1e-8)

    def test_failing_tolerance_reports_false(self):
        report = verify(FIB, 70, 1e-18)
        assert not report.passed
        assert not all(p.passed for p in report.paths.values())

    def test_path_agreement_random(self):
        rng = random.Random(140)
        checked = 0
        attempts = 0
        while checked < 60 and attempts < 600:
            attempts += 1
            rec = random_integral(rng, rng.randint(2, 4))
            try:
                report = verify(rec, 25, 1e-6)
            except DomainError:
                continue
            assert report.passed, (rec.coeffs, rec.seeds,
                                   {n: p.max_rel_err for n, p in report.paths.items()})
            checked += 1
        assert checked >= 60


class TestHomogeneityConstant:
    def test_constant_weight_is_zero_without_root_at_one(self):
        rng = random.Random(88)
        checked = 0
        while checked < 100:
            rec = random_integral(rng, rng.randint(2, 4))
            try:
                form = solve_weights(rec)
            except DomainError:
                continue
            if any(abs(r - 1) < 1e-3 for r in form.roots.roots):
                continue
            seeds_scale = max(abs(float(x)) for x in iterate(rec, rec.order + 1))
            weight_scale = max(abs(w) for w in form.weights[:-1])
            scale = 1.0 + seeds_scale + weight_scale
            assert abs(form.weights[-1]) <= 1e-9 * scale
            checked += 1
