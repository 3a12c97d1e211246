import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ellipbounds import (
    ALPHA_STAR,
    ALZER_ALPHA,
    ALZER_BETA,
    BETA_STAR,
    LAMBDA_STAR,
    MU_STAR,
    SHARP,
    BoundSpec,
    ConfigurationError,
    DomainError,
    Family,
    InvalidBoundError,
    Modulus,
    Side,
    alzer_qiu_upper,
    barnard_upper,
    best_enclosure,
    complete_e,
    corollary31,
    default_candidates,
    parse_bound_spec,
    q_mean,
    thm11_bound,
    thm12_bound,
    thm12_lower_threshold,
    thm12_upper_threshold,
    toader_mean,
    vuorinen_lower,
)

HALF_PI = math.pi / 2.0

# first computation, frozen as regression values
COR31_WIDTH_AT_HALF = 0.00045510062711651145


def grid(n=1000, eps=1e-6):
    return [eps + i * (1 - 2 * eps) / (n - 1) for i in range(n)]


class TestSharpConstants:
    def test_against_extended_precision(self):
        with mpmath.workdps(40):
            pi = mpmath.pi
            refs = {
                "beta_star": mpmath.mpf(1) / 2 - 2 * mpmath.sqrt(2 * (pi**2 - 8)) / pi**2,
                "alpha_star": mpmath.mpf(1) / 2 - mpmath.sqrt(2) / 4,
                "alzer_alpha": mpmath.mpf(1) / 2 - mpmath.sqrt(2) / 4,
                "alzer_beta": mpmath.mpf(1) / 2 + mpmath.sqrt(2) / 4,
                "lambda_star": mpmath.mpf(1) / 2 + mpmath.sqrt(2) / 8,
                "mu_star": mpmath.mpf(1) / 2 + mpmath.sqrt((4 / pi) ** 2 - 1) / 2,
            }
            for name, ref in refs.items():
                got = getattr(SHARP, name)
                assert abs(got - float(ref)) <= 2 * math.ulp(float(ref)), name

    def test_ordering(self):
        assert 0.0 < BETA_STAR < ALPHA_STAR < 0.5 < LAMBDA_STAR < 1.0
        assert 0.5 < MU_STAR < 1.0

    def test_alzer_pair_sums_to_one(self):
        assert ALZER_ALPHA + ALZER_BETA == pytest.approx(1.0, abs=2e-16)

    def test_thresholds_ordered(self):
        for p in (0.5, 0.8, 1.0, 1.7, 2.0):
            assert 0.5 < thm12_lower_threshold(p) < thm12_upper_threshold(p) <= 1.0

    def test_cor31_constants_are_thm12_thresholds(self):
        assert LAMBDA_STAR == pytest.approx(thm12_lower_threshold(2.0), abs=2e-16)
        assert MU_STAR == pytest.approx(thm12_upper_threshold(0.5), abs=2e-16)


class TestVuorinen:
    def test_limit_at_zero(self):
        assert vuorinen_lower(1e-9) == pytest.approx(HALF_PI, abs=1e-12)

    def test_limit_at_one(self):
        # approach rate is ~0.66 r'^(3/2), i.e. 1.1e-9 at r = 1 - 1e-12
        assert vuorinen_lower(1 - 1e-12) == pytest.approx(2.0 ** (-5.0 / 3.0) * math.pi, abs=1e-8)

    def test_below_e_with_small_gap(self):
        v = vuorinen_lower(0.5)
        e = complete_e(0.5)
        assert v < e
        assert e - v < 0.01

    def test_open_domain(self):
        for r in (0.0, 1.0):
            with pytest.raises(DomainError):
                vuorinen_lower(r)


class TestBarnard:
    def test_limits(self):
        assert barnard_upper(1e-9) == pytest.approx(HALF_PI, abs=1e-12)
        assert barnard_upper(1 - 1e-12) == pytest.approx(math.pi / (2 * math.sqrt(2)), abs=1e-6)

    def test_above_e(self):
        assert barnard_upper(0.5) > complete_e(0.5)


class TestAlzerQiu:
    def test_limits(self):
        assert alzer_qiu_upper(1e-9) == pytest.approx(HALF_PI, abs=1e-12)
        limit = math.pi / 8 * (math.sqrt(2 + math.sqrt(2)) + math.sqrt(2 - math.sqrt(2)))
        assert alzer_qiu_upper(1 - 1e-9) == pytest.approx(limit, abs=1e-8)

    def test_above_e(self):
        assert alzer_qiu_upper(0.5) > complete_e(0.5)

    def test_coincides_with_thm11_at_alpha(self):
        # same bound written two algebraically different ways
        for r in grid(500):
            assert abs(alzer_qiu_upper(r) - thm11_bound(r, ALZER_ALPHA)) < 1e-15


class TestThm11:
    def test_q_half_is_barnard(self):
        for r in (0.1, 0.5, 0.9):
            assert thm11_bound(r, 0.5) == pytest.approx(barnard_upper(r), abs=1e-16)

    def test_beta_star_limit_at_one(self):
        assert thm11_bound(1 - 1e-12, BETA_STAR) == pytest.approx(1.0, abs=1e-11)

    def test_q_above_alpha_star_is_upper(self):
        spec = BoundSpec(Family.THM11, q=0.3)
        assert spec.side is Side.UPPER
        for r in grid(1000):
            assert thm11_bound(r, 0.3) > complete_e(r) - 1e-13

    @pytest.mark.parametrize("q", [0.0, -0.1, 0.50001, 1.0])
    def test_q_domain(self, q):
        with pytest.raises(DomainError):
            thm11_bound(0.5, q)

    def test_observed_monotone_increasing_in_q(self):
        # not asserted by the theorems; recorded as an observation
        r = 0.37
        vals = [thm11_bound(r, 0.01 + 0.49 * i / 99) for i in range(100)]
        assert all(b > a for a, b in zip(vals, vals[1:]))


class TestThm12:
    @given(st.floats(min_value=0.5, max_value=1.0), st.floats(min_value=0.5, max_value=2.0))
    @settings(max_examples=50)
    def test_limit_at_zero(self, t, p):
        assert thm12_bound(1e-9, t, p) == pytest.approx(HALF_PI, abs=1e-12)

    def test_lambda_p2_matches_quartic_form(self):
        # pi (1 + r')^-3 ([l + (1-l) r']^2 + [(1-l) + l r']^2)^2
        for r in (0.2, 0.5, 0.8, 0.99):
            m = Modulus(r)
            rc = m.r_comp
            x = LAMBDA_STAR + (1 - LAMBDA_STAR) * rc
            y = (1 - LAMBDA_STAR) + LAMBDA_STAR * rc
            direct = math.pi / (1 + rc) ** 3 * (x * x + y * y) ** 2
            assert thm12_bound(r, LAMBDA_STAR, 2.0) == pytest.approx(direct, rel=1e-15)

    def test_t_half_p_one_reduces_to_quarter_pi_times(self):
        # t = 1/2, p = 1 collapses to (pi/4)(1 + r'), a lower bound
        r = 0.6
        m = Modulus(r)
        reduced = math.pi / 4.0 * (1.0 + m.r_comp)
        assert thm12_bound(r, 0.5, 1.0) == pytest.approx(reduced, rel=1e-15)
        assert thm12_bound(r, 0.5, 1.0) < complete_e(r)
        assert BoundSpec(Family.THM12, t=0.5, p=1.0).side is Side.LOWER

    @pytest.mark.parametrize("t,p", [(0.4, 1.0), (1.1, 1.0), (0.7, 0.4), (0.7, 2.1)])
    def test_parameter_domain(self, t, p):
        with pytest.raises(DomainError):
            thm12_bound(0.5, t, p)


class TestCorollary31:
    def test_upper_limit_at_one(self):
        enc = corollary31(1 - 1e-12)
        assert enc.hi == pytest.approx(1.0, abs=1e-5)
        assert enc.hi > 1.0

    def test_collapses_at_zero(self):
        enc = corollary31(1e-9)
        assert enc.lo == pytest.approx(HALF_PI, abs=1e-12)
        assert enc.hi == pytest.approx(HALF_PI, abs=1e-12)

    def test_width_at_half(self):
        enc = corollary31(0.5)
        e = complete_e(0.5)
        assert enc.lo < e < enc.hi
        assert enc.width < 0.02
        assert enc.width == pytest.approx(COR31_WIDTH_AT_HALF, abs=1e-12)

    def test_sources(self):
        enc = corollary31(0.5)
        assert enc.lo_source.family is Family.COR31_LOWER
        assert enc.hi_source.family is Family.COR31_UPPER


class TestQMean:
    @given(st.floats(min_value=0.01, max_value=100.0),
           st.floats(min_value=0.5, max_value=1.0),
           st.floats(min_value=0.5, max_value=2.0))
    @settings(max_examples=50)
    def test_diagonal(self, x, t, p):
        assert q_mean(x, x, t, p) == pytest.approx(x, rel=1e-14)

    def test_t_half_is_arithmetic_mean(self):
        assert q_mean(3.0, 1.0, 0.5, 1.7) == pytest.approx(2.0, rel=1e-15)

    @given(st.floats(min_value=0.1, max_value=10.0), st.floats(min_value=0.1, max_value=10.0))
    @settings(max_examples=50)
    def test_symmetry_and_homogeneity(self, a, b):
        assert q_mean(a, b, 0.8, 1.5) == pytest.approx(q_mean(b, a, 0.8, 1.5), rel=1e-14)
        assert q_mean(2 * a, 2 * b, 0.8, 1.5) == pytest.approx(2 * q_mean(a, b, 0.8, 1.5), rel=1e-14)

    def test_strictly_increasing_in_t(self):
        for p in (0.5, 1.0, 2.0):
            vals = [q_mean(2.0, 1.0, 0.5 + 0.5 * i / 99, p) for i in range(100)]
            assert all(b > a for a, b in zip(vals, vals[1:]))

    @pytest.mark.parametrize("p", [0.5, 1.0, 2.0])
    def test_brackets_toader_mean(self, p):
        # at the p = 2 lower threshold the gap is O(r^12): below one ulp for
        # small r, hence the rounding slack there and strictness from 0.4 up
        t1, t2 = thm12_lower_threshold(p), thm12_upper_threshold(p)
        for r in (0.1, 0.4, 0.7, 0.95):
            m = Modulus(r)
            tm = toader_mean(1.0, m.r_comp)
            assert q_mean(1.0, m.r_comp, t1, p) <= tm + 1e-13
            assert tm <= q_mean(1.0, m.r_comp, t2, p) + 1e-13
            if r >= 0.4:
                assert q_mean(1.0, m.r_comp, t1, p) < tm < q_mean(1.0, m.r_comp, t2, p)

    def test_domain(self):
        with pytest.raises(DomainError):
            q_mean(-1.0, 1.0, 0.8, 1.0)
        with pytest.raises(DomainError):
            q_mean(1.0, 1.0, 0.2, 1.0)


class TestBoundSpecSide:
    def test_thm11_classification(self):
        assert BoundSpec(Family.THM11, q=BETA_STAR).side is Side.LOWER
        assert BoundSpec(Family.THM11, q=BETA_STAR + 1e-15).side is Side.INVALID
        assert BoundSpec(Family.THM11, q=0.13).side is Side.INVALID
        assert BoundSpec(Family.THM11, q=ALPHA_STAR).side is Side.UPPER
        assert BoundSpec(Family.THM11, q=0.01).side is Side.LOWER

    def test_thm12_classification(self):
        for p in (0.5, 1.0, 2.0):
            t1, t2 = thm12_lower_threshold(p), thm12_upper_threshold(p)
            assert BoundSpec(Family.THM12, t=t1, p=p).side is Side.LOWER
            assert BoundSpec(Family.THM12, t=t2, p=p).side is Side.UPPER
            assert BoundSpec(Family.THM12, t=0.5 * (t1 + t2), p=p).side is Side.INVALID

    def test_fixed_families(self):
        assert BoundSpec(Family.VUORINEN).side is Side.LOWER
        assert BoundSpec(Family.COR31_UPPER).side is Side.UPPER

    def test_parameter_validation(self):
        with pytest.raises(ConfigurationError):
            BoundSpec(Family.THM11)
        with pytest.raises(ConfigurationError):
            BoundSpec(Family.VUORINEN, q=0.1)
        with pytest.raises(DomainError):
            BoundSpec(Family.THM12, t=0.3, p=1.0)


class TestBestEnclosure:
    def test_singleton_per_side(self):
        enc = best_enclosure(0.5, [BoundSpec(Family.VUORINEN), BoundSpec(Family.BARNARD)])
        assert enc.lo == vuorinen_lower(0.5)
        assert enc.hi == barnard_upper(0.5)
        assert enc.lo_source.family is Family.VUORINEN

    def test_sources_near_one(self):
        enc = best_enclosure(0.99, default_candidates())
        lo_fam = enc.lo_source
        # the asymptotically precise families win near r = 1
        assert (lo_fam.family is Family.THM11 or lo_fam.family is Family.COR31_LOWER
                or (lo_fam.family is Family.THM12 and lo_fam.p == 2.0
                    and lo_fam.t == pytest.approx(LAMBDA_STAR, abs=1e-15)))
        enc999 = best_enclosure(0.999, default_candidates())
        assert enc999.lo_source.family is Family.THM11
        assert enc999.lo_source.q == pytest.approx(BETA_STAR, abs=1e-15)

    def test_tighter_than_any_pair(self):
        enc = best_enclosure(0.5, default_candidates())
        e = complete_e(0.5)
        for lo_spec in default_candidates():
            if lo_spec.side is not Side.LOWER:
                continue
            for hi_spec in default_candidates():
                if hi_spec.side is not Side.UPPER:
                    continue
                pair_width = (e - lo_spec.evaluate(0.5)) + (hi_spec.evaluate(0.5) - e)
                assert enc.width <= pair_width + 1e-16

    def test_contains_reference_on_grid(self):
        cands = default_candidates()
        for r in grid(300):
            enc = best_enclosure(r, cands)
            e = complete_e(r)
            # ulp-level inversions near r = 0 are absorbed by the rounding slack
            assert enc.lo <= e + 1e-13
            assert enc.hi >= e - 1e-13

    def test_strict_interval_mid_range(self):
        for r in (0.3, 0.5, 0.7, 0.9):
            enc = best_enclosure(r, default_candidates())
            e = complete_e(r)
            assert enc.lo < e < enc.hi

    def test_errors(self):
        with pytest.raises(ConfigurationError):
            best_enclosure(0.5, [])
        with pytest.raises(ConfigurationError):
            best_enclosure(0.5, [BoundSpec(Family.VUORINEN)])
        with pytest.raises(InvalidBoundError):
            best_enclosure(0.5, [BoundSpec(Family.THM11, q=0.13), BoundSpec(Family.BARNARD)])


class TestParseBoundSpec:
    def test_plain_families(self):
        assert parse_bound_spec("vuorinen").family is Family.VUORINEN
        assert parse_bound_spec(" cor31-upper ").family is Family.COR31_UPPER

    def test_parametric(self):
        spec = parse_bound_spec("thm12:t=0.85,p=2")
        assert spec.family is Family.THM12
        assert spec.t == 0.85 and spec.p == 2.0
        assert parse_bound_spec("thm11:q=0.05").q == 0.05

    def test_symbolic_constants(self):
        assert parse_bound_spec("thm11:q=beta_star").q == BETA_STAR
        assert parse_bound_spec("thm11-lower").q == BETA_STAR
        assert parse_bound_spec("thm11-upper").q == ALPHA_STAR
        assert parse_bound_spec("thm12-lower:p=2").t == thm12_lower_threshold(2.0)
        assert parse_bound_spec("thm12-upper:p=0.5").t == thm12_upper_threshold(0.5)

    def test_side_alias_mismatch(self):
        with pytest.raises(InvalidBoundError):
            parse_bound_spec("thm11-lower:q=0.3")
        with pytest.raises(InvalidBoundError):
            parse_bound_spec("thm11-upper:q=0.01")

    def test_parse_errors(self):
        for bad in ("bogus", "thm11", "thm11:q=abc", "thm12:t=0.8", "vuorinen:q=1",
                    "thm11:zz=1", "thm12-lower"):
            with pytest.raises((ConfigurationError, DomainError)):
                parse_bound_spec(bad)

    def test_labels_round_trip(self):
        for spec in default_candidates():
            again = parse_bound_spec(spec.label)
            assert again == spec
