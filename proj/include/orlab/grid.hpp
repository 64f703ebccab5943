#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orlab {

// Uniform partition of [lo, hi] into n cells; values live at cell centers.
struct Grid1D {
    double lo = -1.0;
    double hi = 1.0;
    int n = 2;

    Grid1D() = default;
    Grid1D(double lo_, double hi_, int n_);

    double h() const { return (hi - lo) / n; }
    double center(int i) const { return lo + (i + 0.5) * h(); }
    double cell_lo(int i) const { return lo + i * h(); }
    double cell_hi(int i) const { return lo + (i + 1) * h(); }

    bool operator==(const Grid1D&) const = default;
};

class DiscreteFunction {
public:
    DiscreteFunction(Grid1D grid, std::vector<double> values);

    static DiscreteFunction constant(const Grid1D& g, double c);
    static DiscreteFunction from_fn(const Grid1D& g,
                                    const std::function<double(double)>& f);
    static DiscreteFunction zeros(const Grid1D& g) { return constant(g, 0.0); }

    const Grid1D& grid() const { return grid_; }
    int size() const { return grid_.n; }
    double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    std::span<const double> values() const { return values_; }

    DiscreteFunction abs() const;
    DiscreteFunction scaled(double c) const;
    // |f|^a cellwise; requires f >= 0 when a is fractional
    DiscreteFunction pow_abs(double a) const;
    DiscreteFunction plus(const DiscreteFunction& o) const;
    DiscreteFunction times(const DiscreteFunction& o) const;
    DiscreteFunction over(const DiscreteFunction& o) const;  // o must be nonzero

    double max_abs() const;

private:
    Grid1D grid_;
    std::vector<double> values_;
};

// A strictly positive DiscreteFunction.
class Weight {
public:
    explicit Weight(DiscreteFunction f);

    const DiscreteFunction& fn() const { return f_; }
    const Grid1D& grid() const { return f_.grid(); }
    int size() const { return f_.size(); }
    double operator[](int i) const { return f_[i]; }

    Weight times(const Weight& o) const { return Weight(f_.times(o.fn())); }
    Weight pow(double a) const { return Weight(f_.pow_abs(a)); }

private:
    DiscreteFunction f_;
};

// mu(E) = sum_{i in E} w_i h over grid cells.
class WeightedMeasure {
public:
    explicit WeightedMeasure(Weight w);
    static WeightedMeasure lebesgue(const Grid1D& g);

    const Weight& weight() const { return w_; }
    const Grid1D& grid() const { return w_.grid(); }
    double total_mass() const { return total_; }
    double cell_mass(int i) const { return w_[i] * w_.grid().h(); }

private:
    Weight w_;
    double total_;
};

// mass of { x : |f(x)| > t }, strict inequality; non-increasing and
// right-continuous in t
double superlevel_mass(const DiscreteFunction& f, const WeightedMeasure& mu, double t);

// mass of { x : |f(x)| >= t }
double superlevel_mass_closed(const DiscreteFunction& f, const WeightedMeasure& mu,
                              double t);

// v = v1 * v2^(1-t) with the factors kept alongside the realized weight
class FactoredWeight {
public:
    FactoredWeight(Weight v1, Weight v2, double t);

    const Weight& v1() const { return v1_; }
    const Weight& v2() const { return v2_; }
    double t() const { return t_; }
    const Weight& realized() const { return v_; }

private:
    Weight v1_, v2_;
    double t_;
    Weight v_;
};

// w_i = |x_i|^a at cell centers; cells whose closure meets 0 get the exact
// cell average of |x|^a instead. Requires a > -1.
Weight make_power_weight(double a, const Grid1D& g);

}  // namespace orlab
