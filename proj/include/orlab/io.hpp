#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "orlab/extrap.hpp"
#include "orlab/grid.hpp"
#include "orlab/norms.hpp"
#include "orlab/rearrange.hpp"
#include "orlab/young.hpp"

namespace orlab {

nlohmann::json to_json(const Grid1D& g);
Grid1D grid_from_json(const nlohmann::json& j);

// {"grid": {"lo","hi","n"}, "values": [...]}
nlohmann::json to_json(const DiscreteFunction& f);
DiscreteFunction function_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j);

// {"kind": "...", "params": {...}}
nlohmann::json to_json(const GrowthFunction& A);
GrowthFunction growth_from_json(const nlohmann::json& j);

nlohmann::json to_json(const NormResult& r);

// [{"mass": m, "value": v}, ...]
nlohmann::json to_json(const StepRearrangement& r);

nlohmann::json to_json(const ExtrapolationConfig& c);
ExtrapolationConfig extrap_config_from_json(const nlohmann::json& j);

// two columns: x_i,value
std::string function_to_csv(const DiscreteFunction& f);

struct SvgSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

// static log-log plot, one polyline per series; points with nonpositive
// coordinates are dropped
std::string svg_loglog_plot(const std::string& title, const std::string& x_label,
                            const std::string& y_label,
                            const std::vector<SvgSeries>& series);

}  // namespace orlab
