#include <doctest.h>

#include <cmath>
#include <numbers>

#include "orlab/io.hpp"
#include "orlab/young.hpp"

using namespace orlab;

namespace {
constexpr double kE = std::numbers::e;

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
}  // namespace

TEST_SUITE_BEGIN("young");

TEST_CASE("evaluation of the builtin shapes") {
    CHECK(GrowthFunction::phi_rho(1.0)(0.0) == 0.0);
    CHECK(GrowthFunction::power(2.0)(3.0) == doctest::Approx(9.0));
    CHECK(GrowthFunction::b_rho(2.0)(1.0) ==
          doctest::Approx(1.0 / std::pow(std::log(kE + 1.0), 2.0)));
    CHECK(GrowthFunction::phi_rho(2.0)(3.0) ==
          doctest::Approx(3.0 * std::pow(std::log(kE + 3.0), 2.0)));

    const auto r = GrowthFunction::rescaled(GrowthFunction::phi_rho(1.0), 2.0);
    CHECK(r(1.5) == GrowthFunction::phi_rho(1.0)(1.5 * 1.5));  // exact composition

    CHECK_THROWS_AS(GrowthFunction::power(2.0)(-1.0), std::domain_error);
    CHECK_THROWS_AS(GrowthFunction::phi_rho(1.0)(std::nan("")), std::domain_error);
}

TEST_CASE("inverse: closed forms and round trips") {
    CHECK(GrowthFunction::power(2.0).inverse(9.0) == doctest::Approx(3.0));
    const auto phi = GrowthFunction::phi_rho(1.0);
    CHECK(rel(phi.inverse(phi(5.0)), 5.0) < 1e-10);
    const auto b = GrowthFunction::b_rho(1.0);
    CHECK(rel(b.inverse(b(0.25)), 0.25) < 1e-10);
    CHECK(phi.inverse(0.0) == 0.0);
    CHECK_THROWS_AS(phi.inverse(-1.0), std::domain_error);
}

TEST_CASE("monotonicity and round trip across kinds") {
    const GrowthFunction kinds[] = {
        GrowthFunction::power(0.5),
        GrowthFunction::power(3.0),
        GrowthFunction::phi_rho(1.0),
        GrowthFunction::phi_rho(2.0),
        GrowthFunction::b_rho(1.0),
        GrowthFunction::rescaled(GrowthFunction::phi_rho(1.0), 2.0),
        GrowthFunction::rescaled(GrowthFunction::b_rho(1.0), 3.0),
        GrowthFunction::psi_conjugate(1.0, 2.0),
        GrowthFunction::conjugate_of(
            GrowthFunction::rescaled(GrowthFunction::phi_rho(1.0), 2.0)),
    };
    const auto probes = log_spaced(1e-8, 1e8, 80);
    for (const auto& A : kinds) {
        double prev = 0.0;
        for (double t : probes) {
            const double v = A(t);
            CHECK(v > prev);
            prev = v;
            CHECK(rel(A.inverse(A(t)), t) < 1e-10);
        }
    }
}

TEST_CASE("b_rho is the reciprocal partner of phi_rho") {
    for (double rho : {1.0, 2.0, 3.5}) {
        const auto phi = GrowthFunction::phi_rho(rho);
        const auto b = GrowthFunction::b_rho(rho);
        for (double t : log_spaced(1e-8, 1e8, 120))
            CHECK(rel(b(t) * phi(1.0 / t), 1.0) < 1e-14);
    }
}

TEST_CASE("rescaling composes on the inverse side") {
    const auto base = GrowthFunction::phi_rho(1.0);
    for (double r : {2.0, 3.5}) {
        const auto res = GrowthFunction::rescaled(base, r);
        for (double y : log_spaced(1e-6, 1e6, 40))
            CHECK(rel(res.inverse(y), std::pow(base.inverse(y), 1.0 / r)) < 1e-10);
    }
}

TEST_CASE("submultiplicativity constants") {
    CHECK(submultiplicativity_constant(GrowthFunction::power(2.0)) ==
          doctest::Approx(1.0));

    const auto phi1 = GrowthFunction::phi_rho(1.0);
    const double c = submultiplicativity_constant(phi1);
    CHECK(c >= 1.0);
    CHECK(c <= 4.0);
    // brute-force oracle: the refined grid moves the estimate by < 5%
    const double c_ref = submultiplicativity_constant(phi1, ProbeGrid{}.refined());
    CHECK(std::abs(c_ref - c) < 0.05 * c);

    const double c2 = submultiplicativity_constant(GrowthFunction::phi_rho(2.0));
    const double c2_ref =
        submultiplicativity_constant(GrowthFunction::phi_rho(2.0), ProbeGrid{}.refined());
    CHECK(std::isfinite(c2));
    CHECK(std::abs(c2_ref - c2) < 0.05 * c2);

    CHECK(phi1.submultiplicativity() == doctest::Approx(c));  // memoized accessor
}

TEST_CASE("lower type constants") {
    const auto exact = lower_type_constant(GrowthFunction::power(2.0), 2.0);
    CHECK(exact.is_lower_type);
    CHECK(exact.constant == doctest::Approx(1.0));

    const auto phi = lower_type_constant(GrowthFunction::phi_rho(1.0), 1.0);
    CHECK(phi.is_lower_type);
    CHECK(phi.constant >= 1.0 - 1e-12);
    CHECK(std::isfinite(phi.constant));

    const auto resc = lower_type_constant(
        GrowthFunction::rescaled(GrowthFunction::phi_rho(1.0), 2.0), 2.0);
    CHECK(resc.is_lower_type);
    CHECK(std::isfinite(resc.constant));

    // t is not of lower type 2: the sup must blow up under refinement
    const auto bad = lower_type_constant(GrowthFunction::power(1.0), 2.0);
    CHECK_FALSE(bad.is_lower_type);
}

TEST_CASE("conjugate identity defect for the psi pair") {
    // single point t = 1, direct evaluation of both factors
    const double d1 = conjugate_identity_defect(1.0, 2.0, ProbeGrid{0.99, 1.01, 3});
    CHECK(d1 >= 1.0);
    CHECK(d1 <= 4.0);

    const double d = conjugate_identity_defect(1.0, 2.0);
    const double d_ref = conjugate_identity_defect(1.0, 2.0, ProbeGrid{}.refined());
    CHECK(std::isfinite(d));
    CHECK(std::abs(d_ref - d) < 0.05 * d);

    // uniformity in r: a large r stays within a factor 2 of r = 2
    const double d_r10 = conjugate_identity_defect(2.0, 10.0);
    const double d_r2 = conjugate_identity_defect(2.0, 2.0);
    CHECK(d_r10 <= 2.0 * d_r2);
    CHECK(d_r2 <= 2.0 * d_r10);
}

TEST_CASE("exact conjugate pairs have defect 1") {
    const auto A = GrowthFunction::rescaled(GrowthFunction::phi_rho(1.0), 2.0);
    const auto B = GrowthFunction::conjugate_of(A);
    CHECK(conjugate_identity_defect(A, B) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("psi conjugate exponent bookkeeping") {
    const auto psi = GrowthFunction::psi_conjugate(1.0, 2.0);
    CHECK(psi.param_r_prime() == doctest::Approx(2.0));
    const auto psi7 = GrowthFunction::psi_conjugate_for_rprime(1.0, 7.0);
    CHECK(psi7.param_r_prime() == doctest::Approx(7.0));
    CHECK(psi7.param_r() == doctest::Approx(7.0 / 6.0));
}

TEST_CASE("custom tables interpolate monotonically") {
    GrowthFunction::CustomTable tab;
    tab.t = {0.0, 1.0, 2.0, 4.0};
    tab.y = {0.0, 0.5, 2.0, 10.0};
    const auto A = GrowthFunction::custom(tab);
    CHECK(A(1.0) == doctest::Approx(0.5));
    CHECK(A(1.5) == doctest::Approx(1.25));
    CHECK(A(8.0) == doctest::Approx(26.0));  // extrapolated by the last slope
    CHECK(rel(A.inverse(A(3.1)), 3.1) < 1e-12);

    tab.y = {0.0, 0.5, 0.5, 10.0};  // not strictly increasing
    CHECK_THROWS_AS(GrowthFunction::custom(tab), std::invalid_argument);
}

TEST_CASE("json round trip") {
    const GrowthFunction kinds[] = {
        GrowthFunction::power(2.5),
        GrowthFunction::phi_rho(1.0),
        GrowthFunction::b_rho(2.0),
        GrowthFunction::rescaled(GrowthFunction::b_rho(1.0), 3.0),
        GrowthFunction::psi_conjugate(1.0, 2.0),
        GrowthFunction::conjugate_of(
            GrowthFunction::rescaled(GrowthFunction::phi_rho(1.0), 2.0)),
    };
    for (const auto& A : kinds) {
        const auto back = growth_from_json(to_json(A));
        for (double t : log_spaced(1e-4, 1e4, 17)) CHECK(rel(back(t), A(t)) < 1e-12);
    }
}

TEST_SUITE_END();
