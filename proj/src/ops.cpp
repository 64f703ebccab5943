#include "orlab/ops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "orlab/rootfind.hpp"

namespace orlab {

namespace {

// prefix[i] = sum of the first i entries of |f|
std::vector<double> abs_prefix(const DiscreteFunction& f) {
    std::vector<double> p(static_cast<std::size_t>(f.size()) + 1, 0.0);
    for (int i = 0; i < f.size(); ++i) p[i + 1] = p[i] + std::abs(f[i]);
    return p;
}

}  // namespace

DiscreteFunction hl_maximal(const DiscreteFunction& f) {
    const int n = f.size();
    const auto p = abs_prefix(f);
    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    // For a fixed left endpoint a, best(i) = max over b >= i of avg(a..b)
    // satisfies best(i) = max(avg(a..i), best(i+1)); sweeping a gives every
    // interval exactly once, O(n^2) total.
    for (int a = 0; a < n; ++a) {
        double best = 0.0;
        for (int i = n - 1; i >= a; --i) {
            const double avg = (p[i + 1] - p[a]) / (i + 1 - a);
            best = std::max(best, avg);
            if (best > out[i]) out[i] = best;
        }
    }
    // singleton intervals give |f_i| exactly; prefix cancellation must not
    // drop below that
    for (int i = 0; i < n; ++i) out[i] = std::max(out[i], std::abs(f[i]));
    return DiscreteFunction(f.grid(), std::move(out));
}

DiscreteFunction weighted_maximal(const DiscreteFunction& f, const Weight& u) {
    if (!(f.grid() == u.grid()))
        throw std::invalid_argument("weighted_maximal: grid mismatch");
    const int n = f.size();
    std::vector<double> pfu(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<double> pu(static_cast<std::size_t>(n) + 1, 0.0);
    for (int i = 0; i < n; ++i) {
        pfu[i + 1] = pfu[i] + std::abs(f[i]) * u[i];
        pu[i + 1] = pu[i] + u[i];
    }
    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    for (int a = 0; a < n; ++a) {
        double best = 0.0;
        for (int i = n - 1; i >= a; --i) {
            const double avg = (pfu[i + 1] - pfu[a]) / (pu[i + 1] - pu[a]);
            best = std::max(best, avg);
            if (best > out[i]) out[i] = best;
        }
    }
    for (int i = 0; i < n; ++i) out[i] = std::max(out[i], std::abs(f[i]));
    return DiscreteFunction(f.grid(), std::move(out));
}

double luxemburg_average(std::span<const double> cells, const GrowthFunction& A) {
    double max_abs = 0.0;
    for (double v : cells) max_abs = std::max(max_abs, std::abs(v));
    if (max_abs == 0.0) return 0.0;
    const double m = static_cast<double>(cells.size());
    if (auto p = A.power_exponent()) {
        double s = 0.0;
        for (double v : cells) s += std::pow(std::abs(v), *p);
        return std::pow(s / m, 1.0 / *p);
    }
    auto modular = [&](double lambda) {
        double s = 0.0;
        for (double v : cells) s += A(std::abs(v) / lambda);
        return s / m;
    };
    BisectOptions opt;
    opt.rel_tol = 1e-9;
    return bisect_nonincreasing_level1(modular, max_abs / A.inverse(1.0), opt);
}

DiscreteFunction orlicz_maximal(const DiscreteFunction& f, const GrowthFunction& A) {
    return orlicz_maximal(f, A,
                          IntervalFamily::auto_family(f.size(), kOrliczMaximalAllCutoff));
}

namespace {

double lux_average_hinted(std::span<const double> cells, const GrowthFunction& A,
                          double hint) {
    double max_abs = 0.0;
    for (double v : cells) max_abs = std::max(max_abs, std::abs(v));
    if (max_abs == 0.0) return 0.0;
    const double m = static_cast<double>(cells.size());
    auto modular = [&](double lambda) {
        double s = 0.0;
        for (double v : cells) s += A(std::abs(v) / lambda);
        return s / m;
    };
    BisectOptions opt;
    opt.rel_tol = 1e-9;
    const double guess = hint > 0.0 ? hint : max_abs / A.inverse(1.0);
    return bisect_nonincreasing_level1(modular, guess, opt);
}

}  // namespace

DiscreteFunction orlicz_maximal(const DiscreteFunction& f, const GrowthFunction& A,
                                const IntervalFamily& family) {
    const int n = f.size();
    if (family.n() != n) throw std::invalid_argument("orlicz_maximal: family size mismatch");
    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    const auto vals = f.values();
    const bool closed_form = A.power_exponent().has_value();
    if (family.kind() == IntervalFamily::Kind::all && !closed_form) {
        // sweep right endpoints for each left endpoint; the previous value is
        // a near-perfect bracket hint for the next one
        for (int a = 0; a < n; ++a) {
            double hint = 0.0;
            for (int b = a + 1; b <= n; ++b) {
                const double val = lux_average_hinted(
                    vals.subspan(static_cast<std::size_t>(a), static_cast<std::size_t>(b - a)),
                    A, hint);
                hint = val;
                for (int i = a; i < b; ++i)
                    if (val > out[static_cast<std::size_t>(i)])
                        out[static_cast<std::size_t>(i)] = val;
            }
        }
        return DiscreteFunction(f.grid(), std::move(out));
    }
    family.for_each([&](IntervalFamily::Interval iv) {
        const double a = luxemburg_average(vals.subspan(static_cast<std::size_t>(iv.lo),
                                                        static_cast<std::size_t>(iv.len)),
                                           A);
        for (int i = iv.lo; i < iv.lo + iv.len; ++i)
            if (a > out[static_cast<std::size_t>(i)]) out[static_cast<std::size_t>(i)] = a;
    });
    return DiscreteFunction(f.grid(), std::move(out));
}

DiscreteFunction hilbert(const DiscreteFunction& f) {
    const int n = f.size();
    // kernel integrated over a cell at center distance k*h; the h cancels:
    // log((k + 1/2) / (k - 1/2)), antisymmetric in k, 0 on the own cell
    std::vector<double> kern(static_cast<std::size_t>(n), 0.0);
    for (int k = 1; k < n; ++k)
        kern[static_cast<std::size_t>(k)] = std::log((k + 0.5) / (k - 0.5));
    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    constexpr double inv_pi = 0.31830988618379067;
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < i; ++j) acc += f[j] * kern[static_cast<std::size_t>(i - j)];
        for (int j = i + 1; j < n; ++j)
            acc -= f[j] * kern[static_cast<std::size_t>(j - i)];
        out[static_cast<std::size_t>(i)] = inv_pi * acc;
    }
    return DiscreteFunction(f.grid(), std::move(out));
}

DiscreteFunction commutator(const DiscreteFunction& b, const DiscreteFunction& f) {
    if (!(b.grid() == f.grid()))
        throw std::invalid_argument("commutator: grid mismatch");
    return b.times(hilbert(f)).plus(hilbert(b.times(f)).scaled(-1.0));
}

DiscreteFunction sawyer(const DiscreteFunction& f, const Weight& u) {
    if (!(f.grid() == u.grid())) throw std::invalid_argument("sawyer: grid mismatch");
    return hl_maximal(f.times(u.fn())).over(u.fn());
}

}  // namespace orlab
