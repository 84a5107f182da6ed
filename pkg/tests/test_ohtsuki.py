import cmath
import math
from fractions import Fraction

import pytest

from lenstau.errors import NotInvertible
from lenstau.lens_invariants import make_lens_space, tau_prime
from lenstau.number_theory import jacobi_symbol
from lenstau.ohtsuki import FormalSeries, binomial_series, ohtsuki_tau


class TestBinomialSeries:
    def test_examples(self):
        assert binomial_series(1, 3).coeffs == (1, 1, 0)
        assert binomial_series(0, 4).coeffs == (1, 0, 0, 0)
        assert binomial_series(Fraction(1, 2), 3).coeffs == \
            (1, Fraction(1, 2), Fraction(-1, 8))

    def test_integer_exponent_is_binomial(self):
        s = binomial_series(5, 8)
        assert [c for c in s.coeffs] == [math.comb(5, n) for n in range(6)] + [0, 0]

    def test_bad_terms(self):
        with pytest.raises(ValueError):
            binomial_series(1, 0)


class TestSeriesOps:
    def test_self_division(self):
        s = binomial_series(Fraction(1, 3), 6) - binomial_series(Fraction(-2, 3), 6)
        one = s.divide(s)
        assert one.coeffs[0] == 1
        assert all(c == 0 for c in one.coeffs[1:])

    def test_mul_truncates(self):
        a = FormalSeries.from_list([1, 1])
        b = FormalSeries.from_list([1, -1])
        assert (a * b).coeffs == (1, 0)

    def test_divide_cancels_leading_h(self):
        num = FormalSeries.from_list([0, 1, 1])   # h + h^2
        den = FormalSeries.from_list([0, 1, 0])   # h
        assert num.divide(den).coeffs == (1, 1)

    def test_add_sub(self):
        a = FormalSeries.from_list([1, 2, 3])
        b = FormalSeries.from_list([1, -2])
        assert (a + b).coeffs == (2, 0)
        assert (a - b).coeffs == (0, 4)

    def test_not_invertible(self):
        zero = FormalSeries.from_list([0, 0, 0])
        with pytest.raises(NotInvertible):
            FormalSeries.from_list([1, 1, 1]).divide(zero)
        with pytest.raises(NotInvertible):
            zero.inverse()

    def test_deeper_numerator_zero_ok(self):
        num = FormalSeries.from_list([0, 0, 1])  # h^2
        den = FormalSeries.from_list([0, 1, 0])  # h
        assert num.divide(den).coeffs == (0, 1)

    def test_evaluate(self):
        s = FormalSeries.from_list([1, Fraction(1, 2), Fraction(1, 4)])
        assert abs(s.evaluate(2 + 0j) - 3.0) < 1e-12


class TestOhtsukiTau:
    def test_sphere(self):
        series = ohtsuki_tau(make_lens_space(1, 0), 5)
        assert series.coeffs == (1, 0, 0, 0, 0)

    def test_rp3(self):
        series = ohtsuki_tau(make_lens_space(2, 1), 4)
        assert series.coeffs[0] == Fraction(1, 2)
        assert series.coeffs[1] == 0
        assert series.coeffs[2] == Fraction(-1, 64)

    def test_lambda0(self):
        for p in range(1, 30):
            for q in range(0 if p == 1 else 1, max(p, 1)):
                if math.gcd(p, q) == 1:
                    s = ohtsuki_tau(make_lens_space(p, q), 2)
                    assert s.coeffs[0] == Fraction(1, p)

    def test_default_truncation(self):
        assert ohtsuki_tau(make_lens_space(3, 1)).truncation_order == 16

    def test_invariance_q_shift_and_inverse(self):
        for (p, q) in [(4, 1), (5, 2), (7, 3), (9, 2), (12, 5)]:
            L = make_lens_space(p, q)
            base = ohtsuki_tau(L, 12)
            assert ohtsuki_tau(make_lens_space(p, q + p), 12) == base
            assert ohtsuki_tau(make_lens_space(p, L.q_star), 12) == base

    def test_even_and_odd_p_through_one_path(self):
        # the closed form has no parity split; spot-check both parities
        even = ohtsuki_tau(make_lens_space(4, 1), 3)
        odd = ohtsuki_tau(make_lens_space(5, 1), 3)
        assert even.coeffs[0] == Fraction(1, 4)
        assert odd.coeffs[0] == Fraction(1, 5)

    def test_bad_terms(self):
        with pytest.raises(ValueError):
            ohtsuki_tau(make_lens_space(2, 1), 0)


class TestNumericEvaluation:
    def test_series_matches_closed_form_at_real_t(self):
        # at real t > 0 there is no branch ambiguity: the truncated series
        # must converge to t^(-3s) (t^(1/2p) - t^(-1/2p))/(t^(1/2) - t^(-1/2))
        from lenstau.number_theory import dedekind_sum

        h = 0.125
        t = 1 + h
        for (p, q) in [(2, 1), (3, 1), (4, 3), (5, 2)]:
            L = make_lens_space(p, q)
            s = float(dedekind_sum(q, p))
            closed = (t ** (-3 * s) * (t ** (1 / (2 * p)) - t ** (-1 / (2 * p)))
                      / (t ** 0.5 - t ** -0.5))
            approx = ohtsuki_tau(L, 30).evaluate(h)
            assert abs(approx - closed) < 1e-12

    def test_convergence_study_at_roots_of_unity(self):
        """Evaluating the series at h = e_r - 1 converges (for r = 7,
        where |h| < 1) to the principal branch of the closed form, not
        to the modular-inverse branch of the exact invariant; at r = 5,
        |h| > 1 and the series diverges.  Recorded as observed facts.
        """
        from lenstau.number_theory import dedekind_sum

        rows = []
        for r in (5, 7):
            h = cmath.exp(2j * cmath.pi / r) - 1
            for p in (2, 3):
                L = make_lens_space(p, 1)
                modular = (tau_prime(L, r).value.to_complex()
                           / jacobi_symbol(p, r))
                t = cmath.exp(2j * cmath.pi / r)
                s = float(dedekind_sum(1, p))
                principal = (t ** (-3 * s)
                             * (t ** (1 / (2 * p)) - t ** (-1 / (2 * p)))
                             / (t ** 0.5 - t ** -0.5))
                val = ohtsuki_tau(L, 25).evaluate(h)
                rows.append((r, p, val, principal, modular))
        for r, p, val, principal, modular in rows:
            print(f"r={r} p={p}: series(25)={val:.6f} principal={principal:.6f}"
                  f" modular={modular:.6f}")
            if r == 7:
                # converges to the principal branch well within 1e-3
                assert abs(val - principal) < 1e-3
                # and visibly not to the modular branch
                assert abs(val - modular) > 0.5
