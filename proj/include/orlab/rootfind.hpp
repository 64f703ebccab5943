#pragma once

#include <functional>

namespace orlab {

struct BisectOptions {
    double rel_tol = 1e-13;   // on the target value y
    double bracket_tol = 1e-14;  // relative width of the t-bracket
    int max_iter = 200;
    double bracket_lo = 1e-300;
    double bracket_hi = 1e300;
};

// Solves f(t) = y for a continuous strictly increasing f on [0, inf) with
// f(0) = 0 and f(t) -> inf. The bracket is grown/shrunk geometrically from
// t = 1, then bisected on a log axis. Throws std::runtime_error if the
// iteration cap is hit, std::domain_error for y < 0 or non-finite y.
double invert_increasing(const std::function<double(double)>& f, double y,
                         const BisectOptions& opt = {});

// Smallest lambda > 0 with g(lambda) <= 1 for a continuous non-increasing g.
// Returns a lambda with g(lambda) in [1 - rel_tol, 1] unless g stays below 1
// everywhere down to the bracket floor (then the floor is returned).
double bisect_nonincreasing_level1(const std::function<double(double)>& g,
                                   double initial_guess,
                                   const BisectOptions& opt = {});

}  // namespace orlab
