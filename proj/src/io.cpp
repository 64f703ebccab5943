#include "orlab/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace orlab {

using nlohmann::json;

json to_json(const Grid1D& g) { return json{{"lo", g.lo}, {"hi", g.hi}, {"n", g.n}}; }

Grid1D grid_from_json(const json& j) {
    return Grid1D(j.at("lo").get<double>(), j.at("hi").get<double>(),
                  j.at("n").get<int>());
}

json to_json(const DiscreteFunction& f) {
    return json{{"grid", to_json(f.grid())},
                {"values", std::vector<double>(f.values().begin(), f.values().end())}};
}

DiscreteFunction function_from_json(const json& j) {
    return DiscreteFunction(grid_from_json(j.at("grid")),
                            j.at("values").get<std::vector<double>>());
}

json to_json(const Weight& w) { return to_json(w.fn()); }

Weight weight_from_json(const json& j) { return Weight(function_from_json(j)); }

json to_json(const GrowthFunction& A) {
    json params;
    switch (A.kind()) {
        case GrowthFunction::Kind::power:
            params["p"] = A.param_p();
            return json{{"kind", "power"}, {"params", params}};
        case GrowthFunction::Kind::phi_rho:
            params["rho"] = A.param_rho();
            return json{{"kind", "phi_rho"}, {"params", params}};
        case GrowthFunction::Kind::b_rho:
            params["rho"] = A.param_rho();
            return json{{"kind", "b_rho"}, {"params", params}};
        case GrowthFunction::Kind::rescaled:
            params["r"] = A.param_r();
            params["base"] = to_json(A.base());
            return json{{"kind", "rescaled"}, {"params", params}};
        case GrowthFunction::Kind::psi_conjugate:
            params["rho"] = A.param_rho();
            params["r"] = A.param_r();
            return json{{"kind", "psi_conjugate"}, {"params", params}};
        case GrowthFunction::Kind::conjugate:
            params["base"] = to_json(A.base());
            return json{{"kind", "conjugate"}, {"params", params}};
        case GrowthFunction::Kind::custom:
            params["t"] = A.table().t;
            params["y"] = A.table().y;
            return json{{"kind", "custom"}, {"params", params}};
    }
    throw std::logic_error("to_json: unhandled growth kind");
}

GrowthFunction growth_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const json& p = j.at("params");
    if (kind == "power") return GrowthFunction::power(p.at("p").get<double>());
    if (kind == "phi_rho") return GrowthFunction::phi_rho(p.at("rho").get<double>());
    if (kind == "b_rho") return GrowthFunction::b_rho(p.at("rho").get<double>());
    if (kind == "rescaled")
        return GrowthFunction::rescaled(growth_from_json(p.at("base")),
                                        p.at("r").get<double>());
    if (kind == "psi_conjugate")
        return GrowthFunction::psi_conjugate(p.at("rho").get<double>(),
                                             p.at("r").get<double>());
    if (kind == "conjugate")
        return GrowthFunction::conjugate_of(growth_from_json(p.at("base")));
    if (kind == "custom") {
        GrowthFunction::CustomTable tab;
        tab.t = p.at("t").get<std::vector<double>>();
        tab.y = p.at("y").get<std::vector<double>>();
        return GrowthFunction::custom(std::move(tab));
    }
    throw std::invalid_argument("growth_from_json: unknown kind '" + kind + "'");
}

namespace {

const char* method_name(NormMethod m) {
    switch (m) {
        case NormMethod::exact_value_max: return "exact_value_max";
        case NormMethod::bisection: return "bisection";
        case NormMethod::rearrangement_sup: return "rearrangement_sup";
        case NormMethod::quadrature: return "quadrature";
    }
    return "unknown";
}

}  // namespace

json to_json(const NormResult& r) {
    return json{{"value", r.value}, {"method", method_name(r.method)},
                {"tolerance", r.tolerance}};
}

json to_json(const StepRearrangement& r) {
    json arr = json::array();
    for (const auto& s : r.steps()) arr.push_back(json{{"mass", s.mass}, {"value", s.value}});
    return arr;
}

json to_json(const ExtrapolationConfig& c) {
    return json{{"rho", c.rho},     {"t", c.t},           {"eps0", c.eps0},
                {"eps", c.eps},     {"p0", c.p0},         {"r", c.r},
                {"r_prime", c.r_prime}, {"K0", c.K0},     {"C0", c.C0},
                {"C1", c.C1},       {"rdf_depth", c.rdf_depth}, {"seed", c.seed}};
}

ExtrapolationConfig extrap_config_from_json(const json& j) {
    ExtrapolationConfig c;
    c.rho = j.at("rho").get<double>();
    c.t = j.at("t").get<double>();
    c.eps0 = j.at("eps0").get<double>();
    c.eps = j.at("eps").get<double>();
    c.p0 = j.at("p0").get<double>();
    c.r = j.at("r").get<double>();
    c.r_prime = j.at("r_prime").get<double>();
    c.K0 = j.at("K0").get<double>();
    c.C0 = j.at("C0").get<double>();
    c.C1 = j.at("C1").get<double>();
    c.rdf_depth = j.value("rdf_depth", 40);
    c.seed = j.value("seed", std::uint64_t{0});
    c.validate();
    return c;
}

std::string function_to_csv(const DiscreteFunction& f) {
    std::ostringstream os;
    os.precision(17);
    os << "x,value\n";
    for (int i = 0; i < f.size(); ++i) os << f.grid().center(i) << "," << f[i] << "\n";
    return os.str();
}

namespace {

struct AxisMap {
    double lo, hi;  // log10 range
    double px0, px1;
    double at(double v) const {
        const double t = (std::log10(v) - lo) / (hi - lo);
        return px0 + t * (px1 - px0);
    }
};

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

}  // namespace

std::string svg_loglog_plot(const std::string& title, const std::string& x_label,
                            const std::string& y_label,
                            const std::vector<SvgSeries>& series) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) {
            if (!(x > 0.0) || !(y > 0.0)) continue;
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (xmax < xmin) {  // nothing plottable
        xmin = ymin = 0.1;
        xmax = ymax = 10.0;
    }
    auto pad = [](double& lo, double& hi) {
        lo = std::log10(lo);
        hi = std::log10(hi);
        const double m = std::max(0.05, 0.05 * (hi - lo));
        lo -= m;
        hi += m;
    };
    pad(xmin, xmax);
    pad(ymin, ymax);

    const double W = 640, H = 420, L = 70, R = 20, T = 40, B = 50;
    const AxisMap xm{xmin, xmax, L, W - R};
    const AxisMap ym{ymin, ymax, H - B, T};  // y grows upward

    std::ostringstream os;
    os.precision(8);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\""
       << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
       << title << "</text>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"" << H - 10
       << "\" text-anchor=\"middle\" font-size=\"12\">" << x_label << "</text>\n";
    os << "<text x=\"14\" y=\"" << H / 2
       << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 14 "
       << H / 2 << ")\">" << y_label << "</text>\n";
    // frame and decade ticks
    os << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << (W - R - L)
       << "\" height=\"" << (H - B - T) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int d = static_cast<int>(std::ceil(xmin)); d <= std::floor(xmax); ++d) {
        const double px = xm.at(std::pow(10.0, d));
        os << "<line x1=\"" << px << "\" y1=\"" << T << "\" x2=\"" << px << "\" y2=\""
           << H - B << "\" stroke=\"#dddddd\"/>\n";
        os << "<text x=\"" << px << "\" y=\"" << H - B + 16
           << "\" text-anchor=\"middle\" font-size=\"10\">1e" << d << "</text>\n";
    }
    for (int d = static_cast<int>(std::ceil(ymin)); d <= std::floor(ymax); ++d) {
        const double py = ym.at(std::pow(10.0, d));
        os << "<line x1=\"" << L << "\" y1=\"" << py << "\" x2=\"" << W - R
           << "\" y2=\"" << py << "\" stroke=\"#dddddd\"/>\n";
        os << "<text x=\"" << L - 6 << "\" y=\"" << py + 3
           << "\" text-anchor=\"end\" font-size=\"10\">1e" << d << "</text>\n";
    }
    int ci = 0;
    double legend_y = T + 14;
    for (const auto& s : series) {
        const char* color = kPalette[ci % 8];
        std::ostringstream pts;
        for (const auto& [x, y] : s.points) {
            if (!(x > 0.0) || !(y > 0.0)) continue;
            pts << xm.at(x) << "," << ym.at(y) << " ";
        }
        os << "<polyline points=\"" << pts.str() << "\" fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"1.5\"/>\n";
        os << "<text x=\"" << W - R - 6 << "\" y=\"" << legend_y
           << "\" text-anchor=\"end\" font-size=\"10\" fill=\"" << color << "\">"
           << s.label << "</text>\n";
        legend_y += 13;
        ++ci;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace orlab
