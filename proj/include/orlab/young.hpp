#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orlab {

// A strictly increasing growth function A : [0, inf) -> [0, inf) with
// A(0) = 0. Instances are immutable and cheap to copy; evaluation and the
// numeric inverse are safe to call concurrently.
//
// Builtin shapes:
//   power(p)              t^p
//   phi_rho(rho)          t * log(e + t)^rho
//   b_rho(rho)            t / log(e + 1/t)^rho          (= 1 / phi_rho(1/t))
//   rescaled(A, r)        A(t^r)
//   psi_conjugate(rho,r)  the partner of rescaled(b_rho(rho), r) whose
//                         inverse is t^{1/r'} / log(e + 1/t)^{rho/r},
//                         r' = r/(r-1); eval is by numeric inversion
//   conjugate_of(A)       the partner with inverse t / A^{-1}(t), so that
//                         A^{-1}(t) B^{-1}(t) = t exactly; meaningful when
//                         A is of lower type > 1
//   custom(table)         piecewise-linear monotone table
class GrowthFunction {
public:
    enum class Kind { power, phi_rho, b_rho, rescaled, psi_conjugate, conjugate, custom };

    struct CustomTable {
        std::vector<double> t;  // strictly increasing, t.front() == 0
        std::vector<double> y;  // strictly increasing, y.front() == 0
    };

    static GrowthFunction power(double p);
    static GrowthFunction phi_rho(double rho);
    static GrowthFunction b_rho(double rho);
    static GrowthFunction rescaled(const GrowthFunction& base, double r);
    static GrowthFunction psi_conjugate(double rho, double r);
    // same function addressed by the conjugate exponent r' > 1 (r = r'/(r'-1))
    static GrowthFunction psi_conjugate_for_rprime(double rho, double r_prime);
    static GrowthFunction conjugate_of(const GrowthFunction& base);
    static GrowthFunction custom(CustomTable table);

    double operator()(double t) const;
    double eval(double t) const { return (*this)(t); }
    // t with |A(t) - y| within relative tolerance; closed form where one exists
    double inverse(double y) const;

    Kind kind() const;
    std::string describe() const;

    // kind-specific parameter access; throws std::logic_error on mismatch
    double param_p() const;
    double param_rho() const;
    double param_r() const;
    double param_r_prime() const;
    const GrowthFunction& base() const;
    const CustomTable& table() const;

    // exponent when kind == power, otherwise empty (used for closed forms)
    std::optional<double> power_exponent() const;

    // submultiplicativity constant on the standard probe grid, memoized
    double submultiplicativity() const;

    struct Impl;

private:
    explicit GrowthFunction(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

// Log-spaced probe grid used by the quantitative regularity estimators.
struct ProbeGrid {
    double lo = 1e-8;
    double hi = 1e8;
    int points = 200;

    std::vector<double> values() const;
    ProbeGrid refined() const { return {lo, hi, 2 * points}; }
    ProbeGrid widened(double decades = 4.0) const;
};

// max over (s, t) in grid^2 of A(st) / (A(s) A(t)), clamped to >= 1
double submultiplicativity_constant(const GrowthFunction& A, const ProbeGrid& grid = {});

struct LowerTypeResult {
    double constant = 0.0;   // empirical sup of A(st) / (s^p A(t)), s in (0,1]
    bool is_lower_type = false;  // false when the sup keeps growing under refinement
};

// empirical lower-type-p constant: A(st) <= C s^p A(t) for s in (0,1]
LowerTypeResult lower_type_constant(const GrowthFunction& A, double p,
                                    const ProbeGrid& grid = {});

// max over the grid of the two-sided gap between t and B_r^{-1}(t) Psi^{-1}(t)
// for the b_rho/psi_conjugate pair with parameters (rho, r)
double conjugate_identity_defect(double rho, double r, const ProbeGrid& grid = {});

// generic pair version: gap between t and A^{-1}(t) B^{-1}(t)
double conjugate_identity_defect(const GrowthFunction& A, const GrowthFunction& B,
                                 const ProbeGrid& grid = {});

std::vector<double> log_spaced(double lo, double hi, int count);

}  // namespace orlab
