#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "orlab/corpus.hpp"
#include "orlab/grid.hpp"
#include "orlab/young.hpp"

namespace orlab {

// The constant budget threaded through the endpoint extrapolation argument.
// Derived quantities are pinned by the invariants
//   p0 = 2 (t - 1) / eps0 + 1,   r' = r / (r - 1) > 2 p0,   K0 = 8 p0 (C0 + C1)
// with eps in (0, min(eps0, 1 / (2 p0))) and r = (1/eps)'.
struct ExtrapolationConfig {
    double rho = 1.0;
    double t = 2.0;       // v sits in A_t
    double eps0 = 0.5;
    double eps = 0.0;
    double p0 = 0.0;
    double r = 0.0;
    double r_prime = 0.0;
    double K0 = 0.0;
    double C0 = 1.0;      // measured L^{p0}(uv) bound for the perturbed maximal op
    double C1 = 1.0;      // sup-norm bound, the A_1 constant of u
    int rdf_depth = 40;
    std::uint64_t seed = 0;

    // fills eps, p0, r, r', K0 from (rho, t, eps0, C0, C1); the safety
    // margins are eps = min(0.9 eps0, 1/(4 p0))
    static ExtrapolationConfig derive(double rho, double t, double eps0, double C0,
                                      double C1, int rdf_depth = 40,
                                      std::uint64_t seed = 0);
    void validate() const;
};

double p0_select(double t, double eps0);

// Largest eps on {0.05, ..., 0.95} such that the A_p constant of u v^eps
// stays within 25% across one grid doubling for every v sample (p = 1 uses
// the A_1 estimator). Empty when no eps passes.
std::optional<double> epsilon0_probe(const WeightGen& u, double p,
                                     const std::vector<WeightGen>& v_samples,
                                     const Grid1D& base_grid);

// The ratio of int_s^inf (1 / A^{-1}(1/t)) t^{-1/p0} dt/t against its
// claimed majorant s^{-1/p0} / A^{-1}(1/s). Throws on divergent quadrature.
double kappa_integral(const GrowthFunction& A, double p0, double s,
                      double rel_tol = 1e-8);

struct InterpolationReport {
    double kappa_measured = 0.0;       // sup of kappa_integral over the s-grid
    double bound_constant = 0.0;       // kappa * (1/p0 - 1/r') when A carries an
                                       // r' (the r-uniform constant), else kappa
    double operator_norm_bound = 0.0;  // 2 (C1 + C0 * kappa)
};

InterpolationReport interpolation_bound(const GrowthFunction& A, double p0, double C0,
                                        double C1, std::span<const double> s_grid = {});

// Truncated majorant sum_{k<=depth} S^k h / (2 K0)^k with S f = M(f u)/u.
// h must be >= 0 cellwise.
DiscreteFunction rubio_de_francia(const DiscreteFunction& h, const Weight& u, double K0,
                                  int depth);

// thrown when a verification hits a zero denominator against a nonzero
// numerator; suites surface it as a counterexample candidate
struct CounterexampleCandidate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// sup over t of t * uv({ M(f v)/v > t }) / int |f| u v; exact over the jump
// values, extra probe points merged in
double verify_sawyer(const Weight& u, const Weight& v, const DiscreteFunction& f,
                     std::span<const double> t_grid = {});

// weak-B_rho norm ratio of f/v against g/v in uv-measure
double verify_endpoint_extrapolation(const DiscreteFunction& f,
                                     const DiscreteFunction& g, const Weight& u,
                                     const Weight& v, double rho);

// sup over t of uv({ |[b,H](f v)|/v > t }) / int Phi_{1+1/eps}(|f|/t) u v
double verify_commutator_corollary(const DiscreteFunction& b, const DiscreteFunction& f,
                                   const Weight& u, const Weight& v, double eps,
                                   std::span<const double> t_grid = {});

// (sum |f_i|^p w_i h)^{1/p}
double lp_norm(const DiscreteFunction& f, double p, const WeightedMeasure& mu);

}  // namespace orlab
