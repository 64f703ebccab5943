#pragma once

#include <cstdint>

#include "orlab/grid.hpp"
#include "orlab/rearrange.hpp"
#include "orlab/young.hpp"

namespace orlab {

enum class NormMethod { exact_value_max, bisection, rearrangement_sup, quadrature };

struct NormResult {
    double value = 0.0;
    NormMethod method = NormMethod::exact_value_max;
    double tolerance = 0.0;
};

// Luxemburg norm: the lambda at which sum A(|f_i|/lambda) w_i h crosses 1,
// by bisection (the modular lands in [1 - 1e-9, 1]); 0 for f == 0.
NormResult luxemburg(const DiscreteFunction& f, const GrowthFunction& A,
                     const WeightedMeasure& mu);

// Weak Orlicz quasinorm inf{ lambda : sup_t A(t) mu(|f| > lambda t) <= 1 }.
// For step data the sup collapses to a max over the jump values v of |f|:
// max v / A^{-1}(1 / mu(|f| >= v)), which is exact.
NormResult weak_orlicz(const DiscreteFunction& f, const GrowthFunction& A,
                       const WeightedMeasure& mu);

// Same quantity computed through the decreasing rearrangement:
// sup_s f*(s) / A^{-1}(1/s), evaluated at the step right-limits. Emits a
// one-time warning when A fails the empirical lower-type-above-1 probe.
NormResult weak_orlicz_rearr(const DiscreteFunction& f, const GrowthFunction& A,
                             const WeightedMeasure& mu);

// Orlicz-Lorentz norm integral of f*(s) / (B^{-1}(1/s) s) ds; per-step
// closed form for power kinds, adaptive log-axis quadrature otherwise.
NormResult orlicz_lorentz_b1(const DiscreteFunction& g, const GrowthFunction& B,
                             const WeightedMeasure& mu);

// same, applied directly to an existing rearrangement
double orlicz_lorentz_b1_steps(const StepRearrangement& r, const GrowthFunction& B);

// classical Lorentz L^{p,1}: the B = t^p case of the above
NormResult lorentz_p1(const DiscreteFunction& f, double p, const WeightedMeasure& mu);

// sum f_i g_i w_i h
double pairing(const DiscreteFunction& f, const DiscreteFunction& g,
               const WeightedMeasure& mu);

// Certified lower bound for the associated norm
// sup{ |pairing(f, g)| : ||f||_{A,inf} = 1 }, from the extremal candidate
// f*(s) = A^{-1}(1/s) aligned against |g| plus seeded random perturbations.
NormResult associated_norm(const DiscreteFunction& g, const GrowthFunction& A,
                           const WeightedMeasure& mu, int candidate_budget,
                           std::uint64_t seed);

}  // namespace orlab
