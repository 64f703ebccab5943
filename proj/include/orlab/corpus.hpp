#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orlab/grid.hpp"

namespace orlab {

using FunctionGen = std::function<DiscreteFunction(const Grid1D&)>;
using WeightGen = std::function<Weight(const Grid1D&)>;

// Deterministic test corpus. Entries are generators so the same object can
// be realized at any resolution; names are the stable CLI identifiers.
struct CorpusFunction {
    std::string name;
    FunctionGen gen;
};

struct FactorGen {
    WeightGen v1;
    WeightGen v2;
    double t;  // A_t index witness, v = v1 v2^{1-t}

    FactoredWeight realize(const Grid1D& g) const;
};

struct CorpusWeight {
    std::string name;
    WeightGen gen;
    bool claimed_a1;
    double at_index;  // smallest convenient t with the weight in A_t
    std::optional<FactorGen> factor;
};

struct CorpusWeightPair {
    std::string name;  // "<u>|<v>"
    CorpusWeight u;
    CorpusWeight v;
};

struct Corpus {
    std::vector<CorpusFunction> functions;
    std::vector<CorpusWeight> weights;
    std::vector<CorpusWeightPair> pairs;

    const CorpusFunction& function(const std::string& name) const;
    const CorpusWeight& weight(const std::string& name) const;
    const CorpusWeightPair& pair(const std::string& name) const;

    std::vector<std::string> function_names() const;
    std::vector<std::string> weight_names() const;
    std::vector<std::string> pair_names() const;
};

const Corpus& standard_corpus();

// symmetric grid on [-1, 1]
Grid1D standard_grid(int n);

// log|x| with the exact cell average on cells touching the singularity;
// the canonical bounded-mean-oscillation exemplar, nominal norm 1
DiscreteFunction bmo_log(const Grid1D& g);

}  // namespace orlab
