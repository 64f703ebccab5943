#include "orlab/corpus.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace orlab {

namespace {

DiscreteFunction indicator(const Grid1D& g, double a, double b) {
    return DiscreteFunction::from_fn(
        g, [a, b](double x) { return (x >= a && x <= b) ? 1.0 : 0.0; });
}

Corpus build_corpus() {
    Corpus c;
    c.functions = {
        {"indicator", [](const Grid1D& g) { return indicator(g, 0.2, 0.5); }},
        {"triangle",
         [](const Grid1D& g) {
             return DiscreteFunction::from_fn(g, [](double x) {
                 const double d = std::abs(x - 0.1);
                 return d < 0.3 ? 1.0 - d / 0.3 : 0.0;
             });
         }},
        {"gaussian",
         [](const Grid1D& g) {
             return DiscreteFunction::from_fn(g, [](double x) {
                 const double z = (x - 0.15) / 0.2;
                 return std::exp(-z * z);
             });
         }},
        {"chirp",
         [](const Grid1D& g) {
             return DiscreteFunction::from_fn(g, [](double x) {
                 return std::sin(8.0 * std::numbers::pi * x * std::abs(x)) *
                        std::exp(-2.0 * x * x);
             });
         }},
        {"spike",
         [](const Grid1D& g) {
             return DiscreteFunction::from_fn(g, [](double x) {
                 return std::min(std::pow(std::abs(x - 0.3), -0.25), 10.0);
             });
         }},
    };

    const WeightGen one = [](const Grid1D& g) {
        return Weight(DiscreteFunction::constant(g, 1.0));
    };
    const WeightGen pow_m12 = [](const Grid1D& g) { return make_power_weight(-0.5, g); };
    const WeightGen pow_m34 = [](const Grid1D& g) { return make_power_weight(-0.75, g); };
    // realized as the factor product 1 * (|x|^{-1/2})^{-1} so the stored
    // factorization matches the weight cellwise, including the averaged
    // cells at the singularity
    const WeightGen pow_p12 = [pow_m12](const Grid1D& g) {
        return pow_m12(g).pow(-1.0);
    };

    // every A_1 member also carries the trivial factorization v * 1^{1-t}
    auto trivial_factor = [](const WeightGen& v, double t) {
        return FactorGen{v,
                         [](const Grid1D& g) {
                             return Weight(DiscreteFunction::constant(g, 1.0));
                         },
                         t};
    };

    c.weights = {
        {"one", one, true, 1.5, trivial_factor(one, 1.5)},
        {"pow-0.5", pow_m12, true, 1.5, trivial_factor(pow_m12, 1.5)},
        {"pow-0.75", pow_m34, true, 1.5, trivial_factor(pow_m34, 1.5)},
        // |x|^{1/2} = 1 * (|x|^{-1/2})^{1-2} sits in A_2 but not A_1
        {"pow+0.5", pow_p12, false, 2.0, FactorGen{one, pow_m12, 2.0}},
    };

    auto pair = [&c](const std::string& un, const std::string& vn) {
        c.pairs.push_back({un + "|" + vn, c.weight(un), c.weight(vn)});
    };
    pair("one", "one");
    pair("pow-0.5", "pow-0.5");
    pair("pow-0.5", "pow+0.5");
    pair("pow-0.75", "one");
    pair("one", "pow-0.5");
    return c;
}

}  // namespace

FactoredWeight FactorGen::realize(const Grid1D& g) const {
    return FactoredWeight(v1(g), v2(g), t);
}

const CorpusFunction& Corpus::function(const std::string& name) const {
    for (const auto& f : functions)
        if (f.name == name) return f;
    throw std::invalid_argument("corpus: unknown function '" + name + "'");
}

const CorpusWeight& Corpus::weight(const std::string& name) const {
    for (const auto& w : weights)
        if (w.name == name) return w;
    throw std::invalid_argument("corpus: unknown weight '" + name + "'");
}

const CorpusWeightPair& Corpus::pair(const std::string& name) const {
    for (const auto& p : pairs)
        if (p.name == name) return p;
    throw std::invalid_argument("corpus: unknown weight pair '" + name + "'");
}

std::vector<std::string> Corpus::function_names() const {
    std::vector<std::string> out;
    for (const auto& f : functions) out.push_back(f.name);
    return out;
}

std::vector<std::string> Corpus::weight_names() const {
    std::vector<std::string> out;
    for (const auto& w : weights) out.push_back(w.name);
    return out;
}

std::vector<std::string> Corpus::pair_names() const {
    std::vector<std::string> out;
    for (const auto& p : pairs) out.push_back(p.name);
    return out;
}

const Corpus& standard_corpus() {
    static const Corpus c = build_corpus();
    return c;
}

Grid1D standard_grid(int n) { return Grid1D(-1.0, 1.0, n); }

DiscreteFunction bmo_log(const Grid1D& g) {
    std::vector<double> v(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) {
        const double xl = g.cell_lo(i), xr = g.cell_hi(i);
        if (xl <= 0.0 && xr >= 0.0) {
            // exact average of log|x|: (1/h) int = (a log a - a + b log b - b)/h
            auto part = [](double a) { return a > 0.0 ? a * std::log(a) - a : 0.0; };
            v[static_cast<std::size_t>(i)] = (part(-xl) + part(xr)) / g.h();
        } else {
            v[static_cast<std::size_t>(i)] = std::log(std::abs(g.center(i)));
        }
    }
    return DiscreteFunction(g, std::move(v));
}

}  // namespace orlab
