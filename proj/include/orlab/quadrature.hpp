#pragma once

#include <functional>

namespace orlab {

// Adaptive Simpson on [a, b]. Throws std::runtime_error when the recursion
// depth cap is hit before the local error estimate drops below tolerance.
double adaptive_simpson(const std::function<double(double)>& fn, double a, double b,
                        double rel_tol, int max_depth = 48);

// Integral of a positive integrand g over (a, b], computed on a log axis.
// a == 0 is allowed when g is integrable at 0: the lower tail is accumulated
// in geometrically widening chunks until it stops contributing relative to
// the running total.
double integrate_log_axis(const std::function<double(double)>& g, double a, double b,
                          double rel_tol);

// Integral of g over [a, inf), log axis, truncated where the integrand has
// decayed below cut_rel times its value at a. g must decay to 0 at infinity.
double integrate_log_axis_to_inf(const std::function<double(double)>& g, double a,
                                 double rel_tol, double cut_rel = 1e-16);

}  // namespace orlab
