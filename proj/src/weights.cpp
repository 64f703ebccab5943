#include "orlab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "orlab/ops.hpp"

namespace orlab {

double ap_constant(const Weight& w, double p, const IntervalFamily& family) {
    if (!(p > 1.0)) throw std::invalid_argument("ap_constant: need p > 1");
    if (family.n() != w.size())
        throw std::invalid_argument("ap_constant: family size mismatch");
    const int n = w.size();
    std::vector<double> pw(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<double> pd(static_cast<std::size_t>(n) + 1, 0.0);
    const double dual_exp = -1.0 / (p - 1.0);
    for (int i = 0; i < n; ++i) {
        pw[i + 1] = pw[i] + w[i];
        pd[i + 1] = pd[i] + std::pow(w[i], dual_exp);
    }
    double worst = 0.0;
    family.for_each([&](IntervalFamily::Interval iv) {
        const double len = iv.len;
        const double aw = (pw[iv.lo + iv.len] - pw[iv.lo]) / len;
        const double ad = (pd[iv.lo + iv.len] - pd[iv.lo]) / len;
        const double c = aw * std::pow(ad, p - 1.0);
        if (c > worst) worst = c;
    });
    return worst;
}

double ap_constant(const Weight& w, double p) {
    return ap_constant(w, p, IntervalFamily::auto_family(w.size(), kApAllIntervalCutoff));
}

double a1_constant(const Weight& w) {
    const auto mw = hl_maximal(w.fn());
    double worst = 0.0;
    for (int i = 0; i < w.size(); ++i) worst = std::max(worst, mw[i] / w[i]);
    return worst;
}

double ap_u_constant(const Weight& w, const Weight& u, double p,
                     const IntervalFamily& family) {
    if (!(w.grid() == u.grid()))
        throw std::invalid_argument("ap_u_constant: grid mismatch");
    if (!(p >= 1.0)) throw std::invalid_argument("ap_u_constant: need p >= 1");
    if (p == 1.0) {
        const auto mw = weighted_maximal(w.fn(), u);
        double worst = 0.0;
        for (int i = 0; i < w.size(); ++i) worst = std::max(worst, mw[i] / w[i]);
        return worst;
    }
    if (family.n() != w.size())
        throw std::invalid_argument("ap_u_constant: family size mismatch");
    const int n = w.size();
    std::vector<double> pwu(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<double> pdu(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<double> pu(static_cast<std::size_t>(n) + 1, 0.0);
    const double dual_exp = -1.0 / (p - 1.0);
    for (int i = 0; i < n; ++i) {
        pwu[i + 1] = pwu[i] + w[i] * u[i];
        pdu[i + 1] = pdu[i] + std::pow(w[i], dual_exp) * u[i];
        pu[i + 1] = pu[i] + u[i];
    }
    double worst = 0.0;
    family.for_each([&](IntervalFamily::Interval iv) {
        const double uq = pu[iv.lo + iv.len] - pu[iv.lo];
        const double aw = (pwu[iv.lo + iv.len] - pwu[iv.lo]) / uq;
        const double ad = (pdu[iv.lo + iv.len] - pdu[iv.lo]) / uq;
        const double c = aw * std::pow(ad, p - 1.0);
        if (c > worst) worst = c;
    });
    return worst;
}

double ap_u_constant(const Weight& w, const Weight& u, double p) {
    return ap_u_constant(w, u, p,
                         IntervalFamily::auto_family(w.size(), kApAllIntervalCutoff));
}

}  // namespace orlab
