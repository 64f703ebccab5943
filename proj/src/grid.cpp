#include "orlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orlab {

Grid1D::Grid1D(double lo_, double hi_, int n_) : lo(lo_), hi(hi_), n(n_) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw std::invalid_argument("Grid1D: need finite lo < hi");
    if (n < 2) throw std::invalid_argument("Grid1D: need n >= 2");
}

DiscreteFunction::DiscreteFunction(Grid1D grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != grid_.n)
        throw std::invalid_argument("DiscreteFunction: value count != grid.n");
    for (double v : values_)
        if (!std::isfinite(v))
            throw std::invalid_argument("DiscreteFunction: values must be finite");
}

DiscreteFunction DiscreteFunction::constant(const Grid1D& g, double c) {
    return DiscreteFunction(g, std::vector<double>(static_cast<std::size_t>(g.n), c));
}

DiscreteFunction DiscreteFunction::from_fn(const Grid1D& g,
                                           const std::function<double(double)>& f) {
    std::vector<double> v(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) v[static_cast<std::size_t>(i)] = f(g.center(i));
    return DiscreteFunction(g, std::move(v));
}

DiscreteFunction DiscreteFunction::abs() const {
    std::vector<double> v(values_.begin(), values_.end());
    for (double& x : v) x = std::abs(x);
    return DiscreteFunction(grid_, std::move(v));
}

DiscreteFunction DiscreteFunction::scaled(double c) const {
    std::vector<double> v(values_.begin(), values_.end());
    for (double& x : v) x *= c;
    return DiscreteFunction(grid_, std::move(v));
}

DiscreteFunction DiscreteFunction::pow_abs(double a) const {
    std::vector<double> v(values_.begin(), values_.end());
    for (double& x : v) x = std::pow(std::abs(x), a);
    return DiscreteFunction(grid_, std::move(v));
}

DiscreteFunction DiscreteFunction::plus(const DiscreteFunction& o) const {
    if (!(grid_ == o.grid_))
        throw std::invalid_argument("DiscreteFunction::plus: grid mismatch");
    std::vector<double> v(values_.begin(), values_.end());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.values_[i];
    return DiscreteFunction(grid_, std::move(v));
}

DiscreteFunction DiscreteFunction::times(const DiscreteFunction& o) const {
    if (!(grid_ == o.grid_))
        throw std::invalid_argument("DiscreteFunction::times: grid mismatch");
    std::vector<double> v(values_.begin(), values_.end());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= o.values_[i];
    return DiscreteFunction(grid_, std::move(v));
}

DiscreteFunction DiscreteFunction::over(const DiscreteFunction& o) const {
    if (!(grid_ == o.grid_))
        throw std::invalid_argument("DiscreteFunction::over: grid mismatch");
    std::vector<double> v(values_.begin(), values_.end());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] /= o.values_[i];
    return DiscreteFunction(grid_, std::move(v));
}

double DiscreteFunction::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

Weight::Weight(DiscreteFunction f) : f_(std::move(f)) {
    for (double v : f_.values())
        if (!(v > 0.0)) throw std::invalid_argument("Weight: values must be > 0");
}

WeightedMeasure::WeightedMeasure(Weight w) : w_(std::move(w)), total_(0.0) {
    const double h = w_.grid().h();
    for (double v : w_.fn().values()) total_ += v * h;
}

WeightedMeasure WeightedMeasure::lebesgue(const Grid1D& g) {
    return WeightedMeasure(Weight(DiscreteFunction::constant(g, 1.0)));
}

double superlevel_mass(const DiscreteFunction& f, const WeightedMeasure& mu, double t) {
    if (!(t >= 0.0)) throw std::domain_error("superlevel_mass: t must be >= 0");
    if (!(f.grid() == mu.grid()))
        throw std::invalid_argument("superlevel_mass: grid mismatch");
    double m = 0.0;
    for (int i = 0; i < f.size(); ++i)
        if (std::abs(f[i]) > t) m += mu.cell_mass(i);
    return m;
}

double superlevel_mass_closed(const DiscreteFunction& f, const WeightedMeasure& mu,
                              double t) {
    if (!(f.grid() == mu.grid()))
        throw std::invalid_argument("superlevel_mass_closed: grid mismatch");
    double m = 0.0;
    for (int i = 0; i < f.size(); ++i)
        if (std::abs(f[i]) >= t) m += mu.cell_mass(i);
    return m;
}

FactoredWeight::FactoredWeight(Weight v1, Weight v2, double t)
    : v1_(std::move(v1)),
      v2_(std::move(v2)),
      t_(t),
      v_(v1_.times(v2_.pow(1.0 - t))) {
    if (!(t > 1.0)) throw std::invalid_argument("FactoredWeight: need t > 1");
    if (!(v1_.grid() == v2_.grid()))
        throw std::invalid_argument("FactoredWeight: grid mismatch");
}

Weight make_power_weight(double a, const Grid1D& g) {
    if (!(a > -1.0))
        throw std::invalid_argument("make_power_weight: |x|^a not integrable, need a > -1");
    std::vector<double> v(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) {
        const double xl = g.cell_lo(i), xr = g.cell_hi(i);
        if (xl <= 0.0 && xr >= 0.0) {
            // exact cell average of |x|^a across the singularity:
            // (|xl|^{a+1} + |xr|^{a+1}) / ((a+1) h)
            const double num = std::pow(-xl, a + 1.0) + std::pow(xr, a + 1.0);
            v[static_cast<std::size_t>(i)] = num / ((a + 1.0) * g.h());
        } else {
            v[static_cast<std::size_t>(i)] = std::pow(std::abs(g.center(i)), a);
        }
    }
    return Weight(DiscreteFunction(g, std::move(v)));
}

}  // namespace orlab
