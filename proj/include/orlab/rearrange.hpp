#pragma once

#include <span>
#include <utility>
#include <vector>

#include "orlab/grid.hpp"

namespace orlab {

// The decreasing rearrangement of |f| with respect to a weighted measure,
// stored as maximal steps of strictly decreasing positive values. f*(s) is
// right-continuous: the k-th value holds on [c_{k-1}, c_k) with c_k the
// cumulative mass through step k, and f*(s) = 0 past the support mass.
class StepRearrangement {
public:
    struct Step {
        double mass;
        double value;
    };

    StepRearrangement(std::vector<Step> steps, double total_mass);

    double operator()(double s) const;
    std::span<const Step> steps() const { return steps_; }
    // mass carried by nonzero values, sum of the step masses
    double support_mass() const { return support_; }
    // mass of the underlying measure over the whole grid
    double total_mass() const { return total_; }

    // Lebesgue measure of { s : f*(s) > t }
    double level_measure(double t) const;

private:
    std::vector<Step> steps_;
    double support_;
    double total_;
};

StepRearrangement rearrangement(const DiscreteFunction& f, const WeightedMeasure& mu);

// Splits f at the height f*(t): cells with |f_i| <= f*(t) stay in .first,
// cells with |f_i| > f*(t) go to .second; the two add back to f exactly.
std::pair<DiscreteFunction, DiscreteFunction> truncate(const DiscreteFunction& f,
                                                       const WeightedMeasure& mu,
                                                       double t);

}  // namespace orlab
