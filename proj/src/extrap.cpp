#include "orlab/extrap.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orlab/norms.hpp"
#include "orlab/ops.hpp"
#include "orlab/quadrature.hpp"
#include "orlab/rearrange.hpp"
#include "orlab/weights.hpp"

namespace orlab {

double p0_select(double t, double eps0) {
    if (!(t > 1.0)) throw std::invalid_argument("p0_select: need t > 1");
    if (!(eps0 > 0.0 && eps0 < 1.0))
        throw std::invalid_argument("p0_select: need eps0 in (0,1)");
    return 2.0 * (t - 1.0) / eps0 + 1.0;
}

ExtrapolationConfig ExtrapolationConfig::derive(double rho, double t, double eps0,
                                                double C0, double C1, int rdf_depth,
                                                std::uint64_t seed) {
    ExtrapolationConfig c;
    c.rho = rho;
    c.t = t;
    c.eps0 = eps0;
    c.C0 = C0;
    c.C1 = C1;
    c.rdf_depth = rdf_depth;
    c.seed = seed;
    c.p0 = p0_select(t, eps0);
    c.eps = std::min(0.9 * eps0, 1.0 / (4.0 * c.p0));
    c.r = 1.0 / (1.0 - c.eps);
    c.r_prime = 1.0 / c.eps;
    c.K0 = 8.0 * c.p0 * (C0 + C1);
    c.validate();
    return c;
}

void ExtrapolationConfig::validate() const {
    auto fail = [](const std::string& what) {
        throw std::invalid_argument("ExtrapolationConfig: " + what);
    };
    if (!(rho > 0.0)) fail("rho must be > 0");
    if (!(t > 1.0)) fail("t must be > 1");
    if (!(eps0 > 0.0 && eps0 < 1.0)) fail("eps0 must lie in (0,1)");
    if (!(p0 > 1.0)) fail("p0 must be > 1");
    if (std::abs(p0 - (2.0 * (t - 1.0) / eps0 + 1.0)) > 1e-9 * p0)
        fail("p0 != 2(t-1)/eps0 + 1");
    if (!(eps > 0.0 && eps < std::min(eps0, 1.0 / (2.0 * p0))))
        fail("eps must lie in (0, min(eps0, 1/(2 p0)))");
    if (std::abs(r - 1.0 / (1.0 - eps)) > 1e-9 * r) fail("r != (1/eps)'");
    if (std::abs(r_prime - r / (r - 1.0)) > 1e-9 * r_prime) fail("r' != r/(r-1)");
    if (!(r_prime > 2.0 * p0)) fail("r' must exceed 2 p0");
    if (std::abs(K0 - 8.0 * p0 * (C0 + C1)) > 1e-9 * K0) fail("K0 != 8 p0 (C0 + C1)");
    if (rdf_depth < 1) fail("rdf_depth must be >= 1");
}

std::optional<double> epsilon0_probe(const WeightGen& u, double p,
                                     const std::vector<WeightGen>& v_samples,
                                     const Grid1D& base_grid) {
    if (!(p >= 1.0)) throw std::invalid_argument("epsilon0_probe: need p >= 1");
    const Grid1D fine(base_grid.lo, base_grid.hi, 2 * base_grid.n);
    auto constant_of = [&](const Weight& w) {
        return p > 1.0 ? ap_constant(w, p) : a1_constant(w);
    };
    for (int k = 19; k >= 1; --k) {
        const double eps = 0.05 * k;
        bool ok = true;
        for (const auto& v : v_samples) {
            const Weight coarse = u(base_grid).times(v(base_grid).pow(eps));
            const Weight refined = u(fine).times(v(fine).pow(eps));
            const double c0 = constant_of(coarse);
            const double c1 = constant_of(refined);
            // growth past 25% under refinement reads as divergence
            if (!std::isfinite(c1) || c1 > 1.25 * c0) {
                ok = false;
                break;
            }
        }
        if (ok) return eps;
    }
    return std::nullopt;
}

double kappa_integral(const GrowthFunction& A, double p0, double s, double rel_tol) {
    if (!(p0 > 1.0)) throw std::invalid_argument("kappa_integral: need p0 > 1");
    if (!(s > 0.0)) throw std::invalid_argument("kappa_integral: need s > 0");
    auto integrand = [&](double t) {
        return 1.0 / (A.inverse(1.0 / t) * std::pow(t, 1.0 / p0) * t);
    };
    const double tail = integrate_log_axis_to_inf(integrand, s, rel_tol);
    const double majorant = std::pow(s, -1.0 / p0) / A.inverse(1.0 / s);
    return tail / majorant;
}

InterpolationReport interpolation_bound(const GrowthFunction& A, double p0, double C0,
                                        double C1, std::span<const double> s_grid) {
    std::vector<double> grid(s_grid.begin(), s_grid.end());
    if (grid.empty()) grid = log_spaced(1e-4, 1e4, 9);
    double kappa = 0.0;
    for (double s : grid) {
        const double k = kappa_integral(A, p0, s);
        if (!std::isfinite(k))
            throw std::runtime_error("interpolation_bound: condition failed at s=" +
                                     std::to_string(s));
        kappa = std::max(kappa, k);
    }
    InterpolationReport rep;
    rep.kappa_measured = kappa;
    rep.bound_constant = kappa;
    if (A.kind() == GrowthFunction::Kind::psi_conjugate) {
        const double gap = 1.0 / p0 - 1.0 / A.param_r_prime();
        if (gap <= 0.0)
            throw std::runtime_error("interpolation_bound: r' must exceed p0");
        rep.bound_constant = kappa * gap;
    }
    rep.operator_norm_bound = 2.0 * (C1 + C0 * kappa);
    return rep;
}

DiscreteFunction rubio_de_francia(const DiscreteFunction& h, const Weight& u, double K0,
                                  int depth) {
    if (depth < 1) throw std::invalid_argument("rubio_de_francia: depth must be >= 1");
    if (!(K0 > 0.0)) throw std::invalid_argument("rubio_de_francia: K0 must be > 0");
    for (double v : h.values())
        if (v < 0.0) throw std::domain_error("rubio_de_francia: h must be >= 0");
    DiscreteFunction acc = h;
    DiscreteFunction term = h;
    const double damp = 1.0 / (2.0 * K0);
    for (int k = 1; k <= depth; ++k) {
        term = sawyer(term, u).scaled(damp);
        acc = acc.plus(term);
    }
    return acc;
}

namespace {

WeightedMeasure product_measure(const Weight& u, const Weight& v) {
    return WeightedMeasure(u.times(v));
}

}  // namespace

double lp_norm(const DiscreteFunction& f, double p, const WeightedMeasure& mu) {
    if (!(p > 0.0)) throw std::invalid_argument("lp_norm: need p > 0");
    const double h = f.grid().h();
    double s = 0.0;
    for (int i = 0; i < f.size(); ++i)
        s += std::pow(std::abs(f[i]), p) * mu.weight()[i] * h;
    return std::pow(s, 1.0 / p);
}

double verify_sawyer(const Weight& u, const Weight& v, const DiscreteFunction& f,
                     std::span<const double> t_grid) {
    const auto uv = product_measure(u, v);
    const auto g = sawyer(f, v);
    const double h = f.grid().h();
    double denom = 0.0;
    for (int i = 0; i < f.size(); ++i)
        denom += std::abs(f[i]) * u[i] * v[i] * h;

    // exact sup: between jumps of t -> uv({g > t}) the ratio grows in t, so
    // it peaks at the left limits, i.e. at closed superlevel sets of the
    // jump values themselves
    const auto steps = rearrangement(g, uv);
    double sup = 0.0;
    double cum = 0.0;
    for (const auto& st : steps.steps()) {
        cum += st.mass;
        sup = std::max(sup, st.value * cum);
    }
    for (double t : t_grid)
        if (t > 0.0) sup = std::max(sup, t * superlevel_mass(g, uv, t));

    if (denom == 0.0) {
        if (sup == 0.0) return 0.0;
        throw std::invalid_argument("verify_sawyer: degenerate input, zero integral");
    }
    return sup / denom;
}

double verify_endpoint_extrapolation(const DiscreteFunction& f,
                                     const DiscreteFunction& g, const Weight& u,
                                     const Weight& v, double rho) {
    const auto uv = product_measure(u, v);
    const auto B = GrowthFunction::b_rho(rho);
    const double num = weak_orlicz(f.over(v.fn()), B, uv).value;
    const double den = weak_orlicz(g.over(v.fn()), B, uv).value;
    if (den == 0.0) {
        if (num == 0.0) return 0.0;
        throw CounterexampleCandidate(
            "verify_endpoint_extrapolation: zero right-hand norm against nonzero left");
    }
    return num / den;
}

double verify_commutator_corollary(const DiscreteFunction& b, const DiscreteFunction& f,
                                   const Weight& u, const Weight& v, double eps,
                                   std::span<const double> t_grid) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("verify_commutator_corollary: eps must be in (0,1)");
    const auto uv = product_measure(u, v);
    const auto phi = GrowthFunction::phi_rho(1.0 + 1.0 / eps);
    const auto op = commutator(b, f.times(v.fn())).over(v.fn());
    const double h = f.grid().h();

    auto phi_integral = [&](double t) {
        double s = 0.0;
        for (int i = 0; i < f.size(); ++i) {
            const double a = std::abs(f[i]);
            if (a > 0.0) s += phi(a / t) * u[i] * v[i] * h;
        }
        return s;
    };

    const auto steps = rearrangement(op, uv);
    double sup = 0.0;
    double cum = 0.0;
    for (const auto& st : steps.steps()) {
        cum += st.mass;
        const double d = phi_integral(st.value);
        if (d == 0.0)
            throw std::invalid_argument(
                "verify_commutator_corollary: degenerate input, vanishing modular");
        sup = std::max(sup, cum / d);
    }
    for (double t : t_grid) {
        if (!(t > 0.0)) continue;
        const double m = superlevel_mass(op, uv, t);
        if (m == 0.0) continue;
        const double d = phi_integral(t);
        if (d == 0.0)
            throw std::invalid_argument(
                "verify_commutator_corollary: degenerate input, vanishing modular");
        sup = std::max(sup, m / d);
    }
    return sup;
}

}  // namespace orlab
