#include "orlab/rootfind.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace orlab {

namespace {

double log_midpoint(double a, double b) {
    return std::sqrt(a) * std::sqrt(b);
}

}  // namespace

double invert_increasing(const std::function<double(double)>& f, double y,
                         const BisectOptions& opt) {
    if (!std::isfinite(y) || y < 0.0)
        throw std::domain_error("invert_increasing: target must be finite and >= 0");
    if (y == 0.0) return 0.0;

    double lo = 1.0, hi = 1.0;
    int budget = opt.max_iter;
    while (f(hi) < y) {
        hi *= 2.0;
        if (hi > opt.bracket_hi || --budget <= 0)
            throw std::runtime_error("invert_increasing: no upper bracket");
    }
    while (f(lo) > y) {
        lo *= 0.5;
        if (lo < opt.bracket_lo || --budget <= 0)
            throw std::runtime_error("invert_increasing: no lower bracket");
    }
    // invariant: f(lo) <= y <= f(hi)
    for (int it = 0; it < opt.max_iter; ++it) {
        const double mid = log_midpoint(lo, hi);
        const double fm = f(mid);
        if (std::isfinite(fm) && std::abs(fm - y) <= opt.rel_tol * y) return mid;
        if (fm < y)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= opt.bracket_tol * hi) return log_midpoint(lo, hi);
    }
    std::ostringstream msg;
    msg << "invert_increasing: no convergence, bracket [" << lo << ", " << hi
        << "] for target " << y;
    throw std::runtime_error(msg.str());
}

double bisect_nonincreasing_level1(const std::function<double(double)>& g,
                                   double initial_guess, const BisectOptions& opt) {
    double hi = initial_guess > 0.0 && std::isfinite(initial_guess) ? initial_guess : 1.0;
    int budget = opt.max_iter;
    while (!(g(hi) <= 1.0)) {
        hi *= 2.0;
        if (hi > opt.bracket_hi || --budget <= 0)
            throw std::runtime_error("level bisection: no upper bracket");
    }
    double lo = hi;
    while (g(lo) <= 1.0) {
        lo *= 0.5;
        if (lo < opt.bracket_lo) return lo;  // value stays below 1 all the way down
        if (--budget <= 0)
            throw std::runtime_error("level bisection: no lower bracket");
    }
    // invariant: g(lo) > 1 >= g(hi); a jump in g can land the level set
    // strictly below 1, so bracket collapse is also accepted.
    double g_hi = g(hi);
    for (int it = 0; it < opt.max_iter; ++it) {
        if (g_hi >= 1.0 - opt.rel_tol) return hi;
        if (hi - lo <= opt.bracket_tol * hi) return hi;
        const double mid = log_midpoint(lo, hi);
        const double gm = g(mid);
        if (gm <= 1.0) {
            hi = mid;
            g_hi = gm;
        } else {
            lo = mid;
        }
    }
    throw std::runtime_error("level bisection: no convergence");
}

}  // namespace orlab
