#include <doctest.h>

#include <cmath>

#include "qmeasure/real_integral.hpp"

using namespace qmeasure;

namespace {

IntervalUnionD upto(double y) { return IntervalUnionD::interval(0.0, y, y == 1.0); }

}  // namespace

TEST_SUITE_BEGIN("real_integral");

TEST_CASE("superlevel sets of the stock integrands") {
    IntervalUnionD whole = IntervalUnionD::whole();
    IntervalUnionD tail = superlevel_set(PiecewiseMonotone::identity(), 0.3, whole);
    REQUIRE(tail.pieces().size() == 1);
    CHECK(tail.pieces()[0].lo == doctest::Approx(0.3));
    CHECK(tail.length() == doctest::Approx(0.7));
    CHECK(tail.includes_one());

    // x^3 above lambda on [0, 0.8]: from the cube root up to 0.8.
    IntervalUnionD cube = superlevel_set(PiecewiseMonotone::monomial(3), 0.125, upto(0.8));
    REQUIRE(cube.pieces().size() == 1);
    CHECK(cube.pieces()[0].lo == doctest::Approx(0.5));
    CHECK(cube.pieces()[0].hi == doctest::Approx(0.8));

    // e^x exceeds any lambda < 1 on the whole domain.
    IntervalUnionD everything = superlevel_set(PiecewiseMonotone::exponential(), 0.5, upto(0.6));
    CHECK(everything.length() == doctest::Approx(0.6));

    IntervalUnionD nothing = superlevel_set(PiecewiseMonotone::identity(), 2.0, whole);
    CHECK(nothing.is_empty());
}

TEST_CASE("sublevel sets mirror the superlevel construction") {
    IntervalUnionD whole = IntervalUnionD::whole();
    IntervalUnionD head = sublevel_set(PiecewiseMonotone::identity(), 0.25, whole);
    REQUIRE(head.pieces().size() == 1);
    CHECK(head.pieces()[0].lo == 0.0);
    CHECK(head.pieces()[0].hi == doctest::Approx(0.25));

    PiecewiseMonotone negated = PiecewiseMonotone::linear(-1.0, 0.0);  // f(x) = -x
    IntervalUnionD below = sublevel_set(negated, -0.5, whole);         // {x : -x < -0.5}
    REQUIRE(below.pieces().size() == 1);
    CHECK(below.pieces()[0].lo == doctest::Approx(0.5));
}

TEST_CASE("destructive-pair integral of the identity") {
    QuadratureResult quad =
        q_integral_real(RealQMeasure::destructive(), PiecewiseMonotone::identity(), IntervalUnionD::whole(), 1e-8);
    CHECK(std::fabs(quad.value - 7.0 / 16.0) < 1e-6);
    CHECK(quad.error_estimate < 1e-6);

    // The float-free route gives exactly 7/16.
    CHECK(exact_identity_integral(RealQMeasure::destructive(), Rat(1)) == Rat(7, 16));
}

TEST_CASE("exact identity integrals across the measure families") {
    for (int k = 1; k <= 4; ++k) {
        Rat y(k, 4);
        CHECK(exact_identity_integral(RealQMeasure::q_lebesgue(), y) == y * y * y / 3);
        CHECK(exact_identity_integral(RealQMeasure::lebesgue(), y) == y * y / 2);
    }
    // Shifted pair families keep the layer function piecewise linear.
    CHECK(exact_identity_integral(RealQMeasure::destructive(Rat(1, 2)), Rat(1)) == Rat(1, 4));
    CHECK_THROWS_AS(exact_identity_integral(RealQMeasure::q_lebesgue(), Rat(0)), std::invalid_argument);
}

TEST_CASE("the destructive layer function matches the worked integrand") {
    RealQMeasure mu = RealQMeasure::destructive();
    PiecewiseMonotone f = PiecewiseMonotone::identity();
    IntervalUnionD whole = IntervalUnionD::whole();
    for (double lambda : {0.05, 0.1, 0.2, 0.24}) {
        double g = mu(superlevel_set(f, lambda, whole));
        CHECK(std::fabs(g - (0.5 + lambda)) < 1e-12);
    }
    for (double lambda : {0.26, 0.5, 0.75, 0.99}) {
        double g = mu(superlevel_set(f, lambda, whole));
        CHECK(std::fabs(g - (1.0 - lambda)) < 1e-12);
    }
}

TEST_CASE("monomial quadrature against the closed form") {
    CHECK(monomial_integral_closed(0, 1.0) == doctest::Approx(1.0));
    CHECK(monomial_integral_closed(2, 1.0) == doctest::Approx(1.0 / 6.0));
    CHECK(monomial_integral_closed(1, 0.5) == doctest::Approx(1.0 / 24.0));
    CHECK(monomial_integral_closed_rat(1, Rat(1, 2)) == Rat(1, 24));

    RealQMeasure qleb = RealQMeasure::q_lebesgue();
    for (int n = 0; n <= 6; ++n) {
        for (double y : {0.25, 0.5, 0.75, 1.0}) {
            QuadratureResult quad = q_integral_real(qleb, PiecewiseMonotone::monomial(n), upto(y), 1e-8);
            CHECK(std::fabs(quad.value - monomial_integral_closed(n, y)) < 1e-6);
        }
    }
}

TEST_CASE("exponential quadrature against the closed form") {
    CHECK(exp_integral_closed(1.0) == doctest::Approx(2.0 * (std::exp(1.0) - 2.0)));
    CHECK(exp_integral_closed(0.0) == 0.0);
    CHECK(exp_integral_closed(0.5) == doctest::Approx(2.0 * (std::exp(0.5) - 1.5)));

    RealQMeasure qleb = RealQMeasure::q_lebesgue();
    for (double y : {0.5, 1.0}) {
        QuadratureResult quad = q_integral_real(qleb, PiecewiseMonotone::exponential(), upto(y), 1e-8);
        CHECK(std::fabs(quad.value - exp_integral_closed(y)) < 1e-6);
    }
}

TEST_CASE("the nonlinear integral is additive on x^2 + x") {
    SurpriseAdditivityReport full = surprise_additivity_check(1.0, 1e-6);
    CHECK(full.pass);
    CHECK(full.expected == doctest::Approx(0.5));

    SurpriseAdditivityReport half = surprise_additivity_check(0.5, 1e-6);
    CHECK(half.pass);
    CHECK(half.expected == doctest::Approx(5.0 / 96.0));

    SurpriseAdditivityReport tiny = surprise_additivity_check(1e-3, 1e-6);
    CHECK(tiny.pass);
}

TEST_CASE("zero integrand integrates to zero with no work") {
    QuadratureResult quad =
        q_integral_real(RealQMeasure::q_lebesgue(), PiecewiseMonotone::constant(0.0), IntervalUnionD::whole(), 1e-10);
    CHECK(quad.value == 0.0);
    CHECK(quad.evaluations == 0);
}

TEST_CASE("signed integrands split into both layer terms") {
    // f(x) = x - 1/2 under plain Lebesgue measure integrates to 0.
    QuadratureResult quad = q_integral_real(RealQMeasure::lebesgue(), PiecewiseMonotone::linear(1.0, -0.5),
                                            IntervalUnionD::whole(), 1e-9);
    CHECK(std::fabs(quad.value) < 1e-7);

    // Under q-Lebesgue the two halves square separately:
    // integral of mu{x > 1/2 + t} dt minus the mirror = 0 by symmetry.
    QuadratureResult sym = q_integral_real(RealQMeasure::q_lebesgue(), PiecewiseMonotone::linear(1.0, -0.5),
                                           IntervalUnionD::whole(), 1e-9);
    CHECK(std::fabs(sym.value) < 1e-7);
}

TEST_CASE("homogeneity and shift within quadrature tolerance") {
    RealQMeasure qleb = RealQMeasure::q_lebesgue();
    IntervalUnionD whole = IntervalUnionD::whole();
    double tol = 1e-8;
    double base = q_integral_real(qleb, PiecewiseMonotone::identity(), whole, tol).value;
    for (double c : {0.5, 2.0}) {
        double scaled = q_integral_real(qleb, PiecewiseMonotone::linear(c, 0.0), whole, tol).value;
        CHECK(std::fabs(scaled - c * base) < 2 * tol + 1e-9);
    }
    // Positive shift of a nonnegative integrand adds c mu(X) = c.
    double shifted = q_integral_real(qleb, PiecewiseMonotone::linear(1.0, 0.5), whole, tol).value;
    CHECK(std::fabs(shifted - (0.5 + base)) < 2 * tol + 1e-9);
}

TEST_CASE("layer function is nonincreasing for monotone integrands") {
    RealQMeasure qleb = RealQMeasure::q_lebesgue();
    PiecewiseMonotone f = PiecewiseMonotone::monomial(2);
    IntervalUnionD domain = upto(0.9);
    double previous = qleb(superlevel_set(f, 0.0, domain));
    for (int k = 1; k <= 40; ++k) {
        double lambda = 0.025 * k;
        double g = qleb(superlevel_set(f, lambda, domain));
        CHECK(g <= previous + 1e-12);
        previous = g;
    }
}

TEST_CASE("second differences recover the integrand") {
    std::vector<double> grid{0.2, 0.4, 0.6, 0.8};
    FtcReport linear = quantum_ftc_check(PiecewiseMonotone::identity(), grid, 1e-2, 5e-3);
    CHECK(linear.pass);
    CHECK(linear.max_error < 1e-4);  // cubic accumulator: only quadrature noise

    FtcReport square = quantum_ftc_check(PiecewiseMonotone::monomial(2), grid, 1e-2, 5e-3);
    CHECK(square.pass);

    FtcReport exponential = quantum_ftc_check(PiecewiseMonotone::exponential(), grid, 1e-2, 5e-3);
    CHECK(exponential.pass);
    REQUIRE(exponential.per_point.size() == 4);

    CHECK_THROWS_AS(quantum_ftc_check(PiecewiseMonotone::identity(), {0.005}, 1e-2, 5e-3), std::invalid_argument);

    // A rise-then-fall function is refused.
    MonotonePiece up{0.0, 0.5, Direction::increasing, [](double x) { return x; }, [](double y) { return y; }};
    MonotonePiece down{0.5, 1.0, Direction::decreasing, [](double x) { return 1.0 - x; },
                       [](double y) { return 1.0 - y; }};
    PiecewiseMonotone tent({up, down});
    CHECK_THROWS_AS(quantum_ftc_check(tent, grid, 1e-2, 5e-3), std::invalid_argument);
}

TEST_CASE("domination does not imply pointwise order") {
    RealQMeasure leb = RealQMeasure::lebesgue();
    PiecewiseMonotone f = PiecewiseMonotone::step_indicator(0.5, 1.0, 0.5);
    PiecewiseMonotone g = PiecewiseMonotone::step_indicator(0.0, 0.5, 1.0);
    DominationReport report = mu_domination_check(leb, f, g, IntervalUnionD::whole());
    CHECK(report.dominates);

    // ... while f > g on [1/2, 1): about half the sample grid.
    double fraction = pointwise_leq_fraction(f, g);
    CHECK(fraction < 0.6);
    CHECK(fraction > 0.4);

    DominationReport self = mu_domination_check(leb, f, f, IntervalUnionD::whole());
    CHECK(self.dominates);

    // The reverse direction fails: f does not dominate g.
    DominationReport reverse = mu_domination_check(leb, g, f, IntervalUnionD::whole());
    CHECK(!reverse.dominates);
}

TEST_CASE("monotone convergence of the scaled identity") {
    RealQMeasure qleb = RealQMeasure::q_lebesgue();
    auto sequence = [](int i) { return PiecewiseMonotone::linear(1.0 - 1.0 / i, 0.0); };
    RealMonotoneReport report = monotone_convergence_demo(qleb, sequence, PiecewiseMonotone::identity(),
                                                          PiecewiseMonotone::identity(), 64, 1e-2);
    CHECK(report.increasing_ok);
    CHECK(report.domination_ok);
    CHECK(report.pass);
    // The probed integrals follow (1 - 1/i)/3.
    CHECK(report.integrals.front() == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(report.limit_integral == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
    CHECK(report.gap == doctest::Approx(1.0 / (3.0 * 64.0)).epsilon(1e-3));
}

TEST_CASE("budget exhaustion raises the tolerance failure") {
    CHECK_THROWS_AS(q_integral_real(RealQMeasure::q_lebesgue(), PiecewiseMonotone::exponential(),
                                    IntervalUnionD::whole(), 1e-12, 20),
                    QuadratureBudgetExceeded);
}

TEST_SUITE_END();
