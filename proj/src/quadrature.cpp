#include "orlab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace orlab {

namespace {

double simpson(const std::function<double(double)>& fn, double a, double fa, double m,
               double fm, double b, double fb) {
    (void)m;
    (void)fn;
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& fn, double a, double fa,
                     double b, double fb, double m, double fm, double whole, double tol,
                     int depth, int max_depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = fn(lm), frm = fn(rm);
    const double left = simpson(fn, a, fa, lm, flm, m, fm);
    const double right = simpson(fn, m, fm, rm, frm, b, fb);
    const double err = left + right - whole;
    if (std::abs(err) <= 15.0 * tol || (b - a) < 1e-14 * (std::abs(a) + std::abs(b)))
        return left + right + err / 15.0;
    if (depth >= max_depth)
        throw std::runtime_error("adaptive_simpson: depth cap reached");
    return adaptive_step(fn, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1, max_depth) +
           adaptive_step(fn, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& fn, double a, double b,
                        double rel_tol, int max_depth) {
    if (!(b > a)) return 0.0;
    const double fa = fn(a), fb = fn(b);
    const double m = 0.5 * (a + b), fm = fn(m);
    const double whole = simpson(fn, a, fa, m, fm, b, fb);
    const double scale = std::abs(whole) + (b - a) * (std::abs(fa) + std::abs(fb) + 1e-300);
    return adaptive_step(fn, a, fa, b, fb, m, fm, whole, rel_tol * scale + 1e-300, 0,
                         max_depth);
}

double integrate_log_axis(const std::function<double(double)>& g, double a, double b,
                          double rel_tol) {
    if (!(b > a) || b <= 0.0) return 0.0;
    auto on_log = [&g](double x) {
        const double s = std::exp(x);
        return g(s) * s;
    };
    const double xb = std::log(b);
    if (a > 0.0) {
        const double xa = std::log(a);
        if (xb - xa < 1e-12) {
            // degenerate slice: midpoint rule is exact enough
            const double s = std::sqrt(a) * std::sqrt(b);
            return g(s) * (b - a);
        }
        return adaptive_simpson(on_log, xa, xb, rel_tol);
    }
    // tail toward s = 0: chunks [xb - 2w, xb - w] with doubling width
    double total = 0.0;
    double width = 4.0;
    double x_hi = xb;
    for (int k = 0; k < 64; ++k) {
        const double x_lo = x_hi - width;
        const double chunk = adaptive_simpson(on_log, x_lo, x_hi, rel_tol);
        total += chunk;
        if (chunk <= 0.25 * rel_tol * total && k > 0) break;
        x_hi = x_lo;
        width *= 2.0;
    }
    return total;
}

double integrate_log_axis_to_inf(const std::function<double(double)>& g, double a,
                                 double rel_tol, double cut_rel) {
    if (a <= 0.0) throw std::domain_error("integrate_log_axis_to_inf: a must be > 0");
    auto on_log = [&g](double x) {
        const double t = std::exp(x);
        return g(t) * t;
    };
    const double ref = std::abs(on_log(std::log(a))) + 1e-300;
    double total = 0.0;
    double width = 4.0;
    double x_lo = std::log(a);
    for (int k = 0; k < 64; ++k) {
        const double x_hi = x_lo + width;
        const double chunk = adaptive_simpson(on_log, x_lo, x_hi, rel_tol);
        if (!std::isfinite(chunk))
            throw std::runtime_error("integrate_log_axis_to_inf: divergent integrand");
        total += chunk;
        const double edge = std::abs(on_log(x_hi));
        if (edge <= cut_rel * ref && chunk <= 0.25 * rel_tol * total) break;
        x_lo = x_hi;
        width *= 2.0;
    }
    return total;
}

}  // namespace orlab
