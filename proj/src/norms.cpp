#include "orlab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "orlab/quadrature.hpp"
#include "orlab/rootfind.hpp"

namespace orlab {

namespace {

constexpr double kInvTol = 1e-12;

// distinct nonzero |f| values (descending) with closed superlevel masses
struct ValueLadder {
    std::vector<double> value;
    std::vector<double> mass_geq;  // mu(|f| >= value[k])
};

ValueLadder value_ladder(const DiscreteFunction& f, const WeightedMeasure& mu) {
    const int n = f.size();
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return std::abs(f[a]) > std::abs(f[b]); });
    ValueLadder lad;
    double cum = 0.0;
    for (int i : idx) {
        const double v = std::abs(f[i]);
        if (v == 0.0) break;
        cum += mu.cell_mass(i);
        if (!lad.value.empty() && lad.value.back() == v)
            lad.mass_geq.back() = cum;
        else {
            lad.value.push_back(v);
            lad.mass_geq.push_back(cum);
        }
    }
    return lad;
}

void check_same_grid(const DiscreteFunction& f, const WeightedMeasure& mu,
                     const char* who) {
    if (!(f.grid() == mu.grid())) throw std::invalid_argument(std::string(who) + ": grid mismatch");
}

}  // namespace

NormResult luxemburg(const DiscreteFunction& f, const GrowthFunction& A,
                     const WeightedMeasure& mu) {
    check_same_grid(f, mu, "luxemburg");
    const double max_abs = f.max_abs();
    if (max_abs == 0.0) return {0.0, NormMethod::bisection, 1e-9};
    const double h = f.grid().h();
    auto modular = [&](double lambda) {
        double s = 0.0;
        for (int i = 0; i < f.size(); ++i) {
            const double a = std::abs(f[i]);
            if (a > 0.0) s += A(a / lambda) * mu.weight()[i] * h;
        }
        return s;
    };
    // A(max/guess) * total == 1 makes the guess always feasible
    const double guess = max_abs / A.inverse(1.0 / mu.total_mass());
    BisectOptions opt;
    opt.rel_tol = 1e-9;
    return {bisect_nonincreasing_level1(modular, guess, opt), NormMethod::bisection, 1e-9};
}

NormResult weak_orlicz(const DiscreteFunction& f, const GrowthFunction& A,
                       const WeightedMeasure& mu) {
    check_same_grid(f, mu, "weak_orlicz");
    const auto lad = value_ladder(f, mu);
    double best = 0.0;
    for (std::size_t k = 0; k < lad.value.size(); ++k)
        best = std::max(best, lad.value[k] / A.inverse(1.0 / lad.mass_geq[k]));
    return {best, NormMethod::exact_value_max, kInvTol};
}

namespace {

void warn_lower_type_once(const GrowthFunction& A) {
    // probe result keyed by the description string so repeated calls with
    // the same shape neither recompute nor repeat the warning
    static std::mutex m;
    static std::map<std::string, bool> checked;
    const std::string key = A.describe();
    {
        std::lock_guard<std::mutex> lk(m);
        if (checked.count(key)) return;
    }
    const bool ok = lower_type_constant(A, 1.05, ProbeGrid{1e-6, 1e6, 60}).is_lower_type;
    std::lock_guard<std::mutex> lk(m);
    if (checked.emplace(key, ok).second && !ok)
        std::cerr << "orlab: warning: rearrangement-sup norm used with " << key
                  << ", which does not look like lower type > 1\n";
}

}  // namespace

NormResult weak_orlicz_rearr(const DiscreteFunction& f, const GrowthFunction& A,
                             const WeightedMeasure& mu) {
    check_same_grid(f, mu, "weak_orlicz_rearr");
    warn_lower_type_once(A);
    const auto r = rearrangement(f, mu);
    double best = 0.0;
    double cum = 0.0;
    for (const auto& st : r.steps()) {
        cum += st.mass;
        // the ratio increases along the step, so its sup is the right limit
        best = std::max(best, st.value / A.inverse(1.0 / cum));
    }
    return {best, NormMethod::rearrangement_sup, kInvTol};
}

double orlicz_lorentz_b1_steps(const StepRearrangement& r, const GrowthFunction& B) {
    if (r.steps().empty()) return 0.0;
    const auto pexp = B.power_exponent();
    auto integrand = [&B](double s) {
        if (s <= 0.0) return 0.0;
        return 1.0 / (B.inverse(1.0 / s) * s);
    };
    double total = 0.0;
    double lo = 0.0;
    std::size_t k = 0;
    for (const auto& st : r.steps()) {
        const double hi = lo + st.mass;
        double piece;
        if (pexp) {
            const double ip = 1.0 / *pexp;
            piece = (std::pow(hi, ip) - std::pow(lo, ip)) / ip;
        } else {
            try {
                piece = integrate_log_axis(integrand, lo, hi, 1e-8);
            } catch (const std::exception& e) {
                std::ostringstream os;
                os << "orlicz_lorentz_b1: quadrature failed on step " << k << " of "
                   << r.steps().size() << " (mass [" << lo << ", " << hi << "], value "
                   << st.value << "): " << e.what();
                throw std::runtime_error(os.str());
            }
        }
        total += st.value * piece;
        lo = hi;
        ++k;
    }
    return total;
}

NormResult orlicz_lorentz_b1(const DiscreteFunction& g, const GrowthFunction& B,
                             const WeightedMeasure& mu) {
    check_same_grid(g, mu, "orlicz_lorentz_b1");
    const double v = orlicz_lorentz_b1_steps(rearrangement(g, mu), B);
    return {v, NormMethod::quadrature, 1e-8};
}

NormResult lorentz_p1(const DiscreteFunction& f, double p, const WeightedMeasure& mu) {
    if (!(p > 0.0)) throw std::invalid_argument("lorentz_p1: p must be > 0");
    return orlicz_lorentz_b1(f, GrowthFunction::power(p), mu);
}

double pairing(const DiscreteFunction& f, const DiscreteFunction& g,
               const WeightedMeasure& mu) {
    check_same_grid(f, mu, "pairing");
    if (!(f.grid() == g.grid())) throw std::invalid_argument("pairing: grid mismatch");
    const double h = f.grid().h();
    double s = 0.0;
    for (int i = 0; i < f.size(); ++i) s += f[i] * g[i] * mu.weight()[i] * h;
    return s;
}

NormResult associated_norm(const DiscreteFunction& g, const GrowthFunction& A,
                           const WeightedMeasure& mu, int candidate_budget,
                           std::uint64_t seed) {
    check_same_grid(g, mu, "associated_norm");
    const int n = g.size();
    if (g.max_abs() == 0.0) return {0.0, NormMethod::rearrangement_sup, 0.0};

    // cells ranked by |g| descending; the k-th gets A^{-1}(1/c_k) with c_k
    // the cumulative mass, the step-data version of f(s) = A^{-1}(1/s)
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return std::abs(g[a]) > std::abs(g[b]); });
    std::vector<double> magnitude(static_cast<std::size_t>(n));
    double cum = 0.0;
    for (int k = 0; k < n; ++k) {
        cum += mu.cell_mass(idx[static_cast<std::size_t>(k)]);
        magnitude[static_cast<std::size_t>(k)] = A.inverse(1.0 / cum);
    }

    auto evaluate = [&](const std::vector<double>& mags) {
        std::vector<double> fv(static_cast<std::size_t>(n), 0.0);
        for (int k = 0; k < n; ++k) {
            const int cell = idx[static_cast<std::size_t>(k)];
            const double sgn = g[cell] < 0.0 ? -1.0 : 1.0;
            fv[static_cast<std::size_t>(cell)] = sgn * mags[static_cast<std::size_t>(k)];
        }
        DiscreteFunction f(g.grid(), std::move(fv));
        const double norm = weak_orlicz(f, A, mu).value;
        if (!(norm > 0.0)) return 0.0;
        return std::abs(pairing(f, g, mu)) / norm;
    };

    double best = evaluate(magnitude);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::normal_distribution<double> gauss(0.0, 0.35);
    for (int c = 0; c < candidate_budget; ++c) {
        std::vector<double> mags = magnitude;
        if (c % 2 == 0) {
            for (double& m : mags) m *= std::exp(gauss(rng));
        } else {
            for (int sw = 0; sw < std::max(1, n / 8); ++sw)
                std::swap(mags[static_cast<std::size_t>(pick(rng))],
                          mags[static_cast<std::size_t>(pick(rng))]);
        }
        best = std::max(best, evaluate(mags));
    }
    return {best, NormMethod::rearrangement_sup, kInvTol};
}

}  // namespace orlab
