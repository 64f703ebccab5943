#include <doctest.h>

#include <cmath>
#include <random>

#include "orlab/grid.hpp"
#include "orlab/rearrange.hpp"
#include "orlab/young.hpp"

using namespace orlab;

namespace {

DiscreteFunction random_fn(const Grid1D& g, std::uint64_t seed, double lo = -1.0,
                           double hi = 1.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(lo, hi);
    std::vector<double> v(static_cast<std::size_t>(g.n));
    for (double& x : v) x = uni(rng);
    return DiscreteFunction(g, std::move(v));
}

}  // namespace

TEST_SUITE_BEGIN("rearrange");

TEST_CASE("indicators and constants collapse to one step") {
    const Grid1D g(0.0, 1.0, 64);
    const auto mu = WeightedMeasure::lebesgue(g);

    const auto ind =
        DiscreteFunction::from_fn(g, [](double x) { return x < 0.25 ? 1.0 : 0.0; });
    const auto ri = rearrangement(ind, mu);
    REQUIRE(ri.steps().size() == 1);
    CHECK(ri.steps()[0].value == 1.0);
    CHECK(ri.steps()[0].mass == doctest::Approx(0.25));
    CHECK(ri(0.1) == 1.0);
    CHECK(ri(0.25) == 0.0);  // right-continuous at the support edge

    const auto c = DiscreteFunction::constant(g, 3.0);
    const auto rc = rearrangement(c, mu);
    REQUIRE(rc.steps().size() == 1);
    CHECK(rc.steps()[0].mass == doctest::Approx(mu.total_mass()));
    CHECK(rc.steps()[0].value == 3.0);
}

TEST_CASE("equimeasurability with the superlevel oracle") {
    const Grid1D g(0.0, 1.0, 64);
    const auto mu = WeightedMeasure::lebesgue(g);
    const auto f = random_fn(g, 11);
    const auto r = rearrangement(f, mu);
    for (const auto& st : r.steps()) {
        const double t = st.value;
        CHECK(r.level_measure(t) == doctest::Approx(superlevel_mass(f, mu, t)));
        const double just_below = t * (1.0 - 1e-13);
        CHECK(r.level_measure(just_below) ==
              doctest::Approx(superlevel_mass(f, mu, just_below)));
    }
    // weighted measure too
    const auto w = Weight(random_fn(g, 12, 0.5, 2.0));
    const auto muw = WeightedMeasure(w);
    const auto rw = rearrangement(f, muw);
    for (const auto& st : rw.steps())
        CHECK(rw.level_measure(st.value) == doctest::Approx(superlevel_mass(f, muw, st.value)));
}

TEST_CASE("modular equality between cells and steps") {
    const Grid1D g(0.0, 1.0, 64);
    const auto w = Weight(random_fn(g, 21, 0.25, 4.0));
    const auto mu = WeightedMeasure(w);
    const auto f = random_fn(g, 22);
    const auto r = rearrangement(f, mu);
    const GrowthFunction As[] = {GrowthFunction::power(2.0), GrowthFunction::phi_rho(1.0),
                                 GrowthFunction::b_rho(1.0)};
    for (const auto& A : As) {
        double cells = 0.0;
        for (int i = 0; i < g.n; ++i)
            if (f[i] != 0.0) cells += A(std::abs(f[i])) * mu.cell_mass(i);
        double steps = 0.0;
        for (const auto& st : r.steps()) steps += A(st.value) * st.mass;
        CHECK(steps == doctest::Approx(cells).epsilon(1e-12));
    }
}

TEST_CASE("contraction and scaling") {
    const Grid1D g(0.0, 1.0, 48);
    const auto mu = WeightedMeasure::lebesgue(g);
    const auto f = random_fn(g, 31);
    auto damp = std::vector<double>(f.values().begin(), f.values().end());
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> shrink(0.0, 1.0);
    for (double& v : damp) v *= shrink(rng);
    const DiscreteFunction fd(g, damp);

    const auto rf = rearrangement(f, mu);
    const auto rd = rearrangement(fd, mu);
    for (double s = 0.0; s < 1.0; s += 1.0 / 97.0) CHECK(rd(s) <= rf(s));

    const auto rs = rearrangement(f.scaled(3.0), mu);
    for (double s = 0.0; s < 1.0; s += 1.0 / 97.0)
        CHECK(rs(s) == doctest::Approx(3.0 * rf(s)).epsilon(1e-15));
}

TEST_CASE("truncation split") {
    const Grid1D g(0.0, 1.0, 64);
    const auto mu = WeightedMeasure::lebesgue(g);

    SUBCASE("constants go entirely to the bounded part") {
        const auto c = DiscreteFunction::constant(g, 2.0);
        const auto [lo, hi] = truncate(c, mu, 0.5);
        CHECK(hi.max_abs() == 0.0);
        CHECK(lo.max_abs() == 2.0);
    }

    SUBCASE("indicator ties stay in the bounded part") {
        const auto ind =
            DiscreteFunction::from_fn(g, [](double x) { return x < 0.5 ? 1.0 : 0.0; });
        const auto [lo, hi] = truncate(ind, mu, 0.25);  // t < mu(E), cut height 1
        CHECK(hi.max_abs() == 0.0);
        CHECK(lo.max_abs() == 1.0);
    }

    SUBCASE("random split satisfies the postconditions") {
        const auto f = random_fn(g, 41);
        const double t = mu.total_mass() / 2.0;
        const auto [lo, hi] = truncate(f, mu, t);
        const auto rf = rearrangement(f, mu);
        const auto rhi = rearrangement(hi, mu);

        for (int i = 0; i < g.n; ++i)
            CHECK(lo[i] + hi[i] == f[i]);  // exact cellwise reassembly
        CHECK(lo.max_abs() <= rf(t));
        CHECK(rhi.support_mass() <= t);  // so (f^t)*(s) = 0 for s >= t
        CHECK(rhi(t) == 0.0);
        // the top part is dominated by f everywhere on the mass axis
        for (double s = 0.0; s < 1.0; s += 1.0 / 61.0) CHECK(rhi(s) <= rf(s));
    }
}

TEST_SUITE_END();
