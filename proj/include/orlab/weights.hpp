#pragma once

#include "orlab/grid.hpp"
#include "orlab/intervals.hpp"

namespace orlab {

inline constexpr int kApAllIntervalCutoff = 4096;

// sup over the family of avg_I(w) * avg_I(w^{-1/(p-1)})^{p-1}, p > 1
double ap_constant(const Weight& w, double p, const IntervalFamily& family);
double ap_constant(const Weight& w, double p);  // default family for w's n

// max_i (Mw)_i / w_i with the exact discrete maximal operator
double a1_constant(const Weight& w);

// u-weighted analogue; p = 1 uses the u-weighted maximal ratio
double ap_u_constant(const Weight& w, const Weight& u, double p,
                     const IntervalFamily& family);
double ap_u_constant(const Weight& w, const Weight& u, double p);

}  // namespace orlab
