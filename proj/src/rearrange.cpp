#include "orlab/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace orlab {

StepRearrangement::StepRearrangement(std::vector<Step> steps, double total_mass)
    : steps_(std::move(steps)), support_(0.0), total_(total_mass) {
    for (std::size_t k = 0; k < steps_.size(); ++k) {
        const auto& s = steps_[k];
        if (!(s.mass > 0.0) || !(s.value > 0.0))
            throw std::invalid_argument("StepRearrangement: steps must be positive");
        if (k > 0 && !(s.value < steps_[k - 1].value))
            throw std::invalid_argument("StepRearrangement: values must strictly decrease");
        support_ += s.mass;
    }
}

double StepRearrangement::operator()(double s) const {
    if (!(s >= 0.0)) throw std::domain_error("StepRearrangement: s must be >= 0");
    double cum = 0.0;
    for (const auto& st : steps_) {
        cum += st.mass;
        if (s < cum) return st.value;
    }
    return 0.0;
}

double StepRearrangement::level_measure(double t) const {
    double cum = 0.0;
    for (const auto& st : steps_) {
        if (st.value > t)
            cum += st.mass;
        else
            break;
    }
    return cum;
}

StepRearrangement rearrangement(const DiscreteFunction& f, const WeightedMeasure& mu) {
    if (!(f.grid() == mu.grid()))
        throw std::invalid_argument("rearrangement: grid mismatch");
    const int n = f.size();
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return std::abs(f[a]) > std::abs(f[b]);
    });
    std::vector<StepRearrangement::Step> steps;
    for (int i : idx) {
        const double v = std::abs(f[i]);
        if (v == 0.0) break;
        if (!steps.empty() && steps.back().value == v)
            steps.back().mass += mu.cell_mass(i);
        else
            steps.push_back({mu.cell_mass(i), v});
    }
    return StepRearrangement(std::move(steps), mu.total_mass());
}

std::pair<DiscreteFunction, DiscreteFunction> truncate(const DiscreteFunction& f,
                                                       const WeightedMeasure& mu,
                                                       double t) {
    if (!(t > 0.0)) throw std::domain_error("truncate: t must be > 0");
    const double cut = rearrangement(f, mu)(t);
    std::vector<double> low(static_cast<std::size_t>(f.size()), 0.0);
    std::vector<double> high(static_cast<std::size_t>(f.size()), 0.0);
    for (int i = 0; i < f.size(); ++i) {
        // ties at the cut height stay in the bounded part
        if (std::abs(f[i]) > cut)
            high[static_cast<std::size_t>(i)] = f[i];
        else
            low[static_cast<std::size_t>(i)] = f[i];
    }
    return {DiscreteFunction(f.grid(), std::move(low)),
            DiscreteFunction(f.grid(), std::move(high))};
}

}  // namespace orlab
